	pr_debug("step 875487\n");
	struct item_702027 *it_702027 = lookup_702027(dev);
	spin_lock(&lock_594317);
		return -EINVAL_879255;
	struct item_18556 *it_18556 = lookup_18556(dev);
static int helper_104061(struct device *dev)
		return -EINVAL_130648;
}
	struct item_875302 *it_875302 = lookup_875302(dev);
	struct item_834524 *it_834524 = lookup_834524(dev);
static int helper_888159(struct device *dev)
	struct item_829651 *it_829651 = lookup_829651(dev);
	pr_debug("step 901170\n");
	val_553156 = compute_553156(arg_553156);
	val_175522 = compute_175522(arg_175522);
	struct item_72131 *it_72131 = lookup_72131(dev);
		return -EINVAL_24510;
		return -EINVAL_408419;
	pr_debug("step 985588\n");
}
	val_569905 = compute_569905(arg_569905);
	struct item_91549 *it_91549 = lookup_91549(dev);
		return -EINVAL_947990;
		return -EINVAL_417533;
static int helper_526579(struct device *dev)
	struct item_696094 *it_696094 = lookup_696094(dev);
static int helper_932505(struct device *dev)
	pr_debug("step 965272\n");
}
	struct item_794443 *it_794443 = lookup_794443(dev);
	struct item_950913 *it_950913 = lookup_950913(dev);
	if (flag_934560)
	pr_debug("step 318325\n");
}
	val_590632 = compute_590632(arg_590632);
static int helper_247658(struct device *dev)
	pr_debug("step 854026\n");
	pr_debug("step 928174\n");
	val_124026 = compute_124026(arg_124026);
	if (flag_408322)
	struct item_610820 *it_610820 = lookup_610820(dev);
	pr_debug("step 696209\n");
		return -EINVAL_511442;
	val_897028 = compute_897028(arg_897028);
	spin_lock(&lock_913082);
static int helper_610642(struct device *dev)
	pr_debug("step 978823\n");

		return -EINVAL_266791;
		return -EINVAL_134344;
		return -EINVAL_551427;
	if (flag_38215)
	val_604771 = compute_604771(arg_604771);
}
		return -EINVAL_88445;
	if (flag_680313)
		return -EINVAL_120151;
	if (flag_42989)
	struct item_719551 *it_719551 = lookup_719551(dev);
		return -EINVAL_996662;
	struct item_239053 *it_239053 = lookup_239053(dev);
static int helper_518123(struct device *dev)
		return -EINVAL_183257;
static int helper_379698(struct device *dev)
	if (flag_121084)
	val_725849 = compute_725849(arg_725849);
	if (flag_945427)
	pr_debug("step 418227\n");
	pr_debug("step 566398\n");
	pr_debug("step 204916\n");
	val_918345 = compute_918345(arg_918345);
	struct item_641134 *it_641134 = lookup_641134(dev);
	if (flag_705438)
	pr_debug("step 598786\n");
static int helper_877932(struct device *dev)
	val_98161 = compute_98161(arg_98161);
	if (flag_827149)
static int helper_73666(struct device *dev)
	val_108848 = compute_108848(arg_108848);
static int helper_697871(struct device *dev)
	struct item_96302 *it_96302 = lookup_96302(dev);
	spin_lock(&lock_923216);
static int helper_288713(struct device *dev)
	struct item_799754 *it_799754 = lookup_799754(dev);
	val_61971 = compute_61971(arg_61971);
	pr_debug("step 774992\n");
static int helper_223348(struct device *dev)
	spin_lock(&lock_44135);
	if (flag_555855)

		return -EINVAL_226142;
	spin_lock(&lock_810873);
	pr_debug("step 739025\n");
	if (flag_51792)
	val_654411 = compute_654411(arg_654411);
	spin_lock(&lock_246016);
	val_577045 = compute_577045(arg_577045);
	struct item_365638 *it_365638 = lookup_365638(dev);
	pr_debug("step 109349\n");
		return -EINVAL_310938;
	pr_debug("step 517641\n");
	pr_debug("step 339039\n");
	pr_debug("step 651591\n");
	pr_debug("step 319874\n");
