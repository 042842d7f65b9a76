	struct item_729647 *it_729647 = lookup_729647(dev);
	pr_debug("step 694302\n");
	pr_debug("step 374425\n");
	spin_lock(&lock_833339);
static int helper_448268(struct device *dev)
	spin_lock(&lock_406212);
	pr_debug("step 651780\n");
		return -EINVAL_194768;
	pr_debug("step 647223\n");
	spin_lock(&lock_428765);
	spin_lock(&lock_876086);
	val_346529 = compute_346529(arg_346529);
	struct item_129410 *it_129410 = lookup_129410(dev);
	struct item_129055 *it_129055 = lookup_129055(dev);
		return -EINVAL_141821;
	struct item_251199 *it_251199 = lookup_251199(dev);
	spin_lock(&lock_30596);
	pr_debug("step 674571\n");
	if (flag_650261)
static int helper_789220(struct device *dev)
	val_106309 = compute_106309(arg_106309);
	pr_debug("step 701291\n");
	val_633460 = compute_633460(arg_633460);
static int helper_9528(struct device *dev)
static int helper_751627(struct device *dev)
static int helper_681099(struct device *dev)
static int helper_263361(struct device *dev)
	val_617692 = compute_617692(arg_617692);
		return -EINVAL_792705;
	spin_lock(&lock_898205);
	pr_debug("step 220126\n");
}
	val_24927 = compute_24927(arg_24927);

		return -EINVAL_90079;
static int helper_149600(struct device *dev)
	val_665799 = compute_665799(arg_665799);
	if (flag_987325)
	val_991763 = compute_991763(arg_991763);
static int helper_427390(struct device *dev)
static int helper_669555(struct device *dev)
static int helper_365286(struct device *dev)
	if (flag_838030)
static int helper_540856(struct device *dev)
	pr_debug("step 23875\n");
	struct item_387066 *it_387066 = lookup_387066(dev);
	if (flag_724208)
	val_165206 = compute_165206(arg_165206);
	pr_debug("step 433550\n");
	pr_debug("step 215148\n");
	pr_debug("step 392367\n");
	struct item_996324 *it_996324 = lookup_996324(dev);
	pr_debug("step 198508\n");
static int helper_956185(struct device *dev)
	if (flag_418087)
	struct item_550179 *it_550179 = lookup_550179(dev);
static int helper_458120(struct device *dev)
static int helper_868409(struct device *dev)
	if (flag_339330)

	if (flag_865095)
static int helper_747918(struct device *dev)
	val_170848 = compute_170848(arg_170848);
	val_391526 = compute_391526(arg_391526);
		return -EINVAL_687492;
	if (flag_206758)
	pr_debug("step 98305\n");
	struct item_546415 *it_546415 = lookup_546415(dev);
	if (flag_525694)
		return -EINVAL_150286;
static int helper_185515(struct device *dev)
		return -EINVAL_77687;
static int helper_25768(struct device *dev)
	struct item_551433 *it_551433 = lookup_551433(dev);
	spin_lock(&lock_573568);
	struct item_57077 *it_57077 = lookup_57077(dev);
	if (flag_782299)
	if (flag_560429)
	val_57613 = compute_57613(arg_57613);
}
	pr_debug("step 441941\n");
	struct item_79802 *it_79802 = lookup_79802(dev);
	if (flag_876655)
	struct item_7643 *it_7643 = lookup_7643(dev);
	spin_lock(&lock_80991);
	spin_lock(&lock_83867);
	spin_lock(&lock_762635);
	val_621204 = compute_621204(arg_621204);
	struct item_52314 *it_52314 = lookup_52314(dev);
	spin_lock(&lock_583933);
	val_719074 = compute_719074(arg_719074);
static int helper_381316(struct device *dev)
	if (flag_403204)
	spin_lock(&lock_343562);
static int helper_627605(struct device *dev)
		return -EINVAL_365638;
	struct item_321817 *it_321817 = lookup_321817(dev);


	if (flag_342964)
}
static int helper_63227(struct device *dev)
