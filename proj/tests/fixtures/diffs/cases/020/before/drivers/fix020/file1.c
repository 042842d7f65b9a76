
	val_157285 = compute_157285(arg_157285);
	spin_lock(&lock_493897);
	pr_debug("step 287570\n");
		return -EINVAL_700586;
		return -EINVAL_11684;
		return -EINVAL_648599;
	spin_lock(&lock_226567);
static int helper_176061(struct device *dev)
static int helper_113901(struct device *dev)
		return -EINVAL_595655;
	val_508033 = compute_508033(arg_508033);
	pr_debug("step 66998\n");

static int helper_190306(struct device *dev)
	if (flag_764228)
	pr_debug("step 183211\n");
	val_17325 = compute_17325(arg_17325);
	if (flag_833476)

	if (flag_121197)
	val_588218 = compute_588218(arg_588218);
static int helper_295129(struct device *dev)
	pr_debug("step 98094\n");
	struct item_265886 *it_265886 = lookup_265886(dev);
	val_591201 = compute_591201(arg_591201);
static int helper_355378(struct device *dev)
static int helper_867317(struct device *dev)
static int helper_11735(struct device *dev)

	if (flag_121706)
		return -EINVAL_128823;
}
	struct item_892662 *it_892662 = lookup_892662(dev);
	struct item_101712 *it_101712 = lookup_101712(dev);
	val_204907 = compute_204907(arg_204907);

	val_397747 = compute_397747(arg_397747);
static int helper_81923(struct device *dev)
	pr_debug("step 664292\n");
	val_438621 = compute_438621(arg_438621);
	if (flag_635837)
	pr_debug("step 124076\n");
static int helper_656697(struct device *dev)
}
		return -EINVAL_854280;
	struct item_608759 *it_608759 = lookup_608759(dev);
		return -EINVAL_964899;
	struct item_3631 *it_3631 = lookup_3631(dev);
		return -EINVAL_372612;
	spin_lock(&lock_520612);
static int helper_513895(struct device *dev)
		return -EINVAL_257245;
	if (flag_431689)

	if (flag_7559)
	val_81264 = compute_81264(arg_81264);
	pr_debug("step 219752\n");
		return -EINVAL_173595;
	spin_lock(&lock_41793);
		return -EINVAL_506682;
	struct item_585185 *it_585185 = lookup_585185(dev);
	struct item_274950 *it_274950 = lookup_274950(dev);
static int helper_825447(struct device *dev)
	val_745777 = compute_745777(arg_745777);
	spin_lock(&lock_25677);
}
	spin_lock(&lock_454948);
	spin_lock(&lock_664782);
	pr_debug("step 105467\n");
}
	struct item_195542 *it_195542 = lookup_195542(dev);
	spin_lock(&lock_71302);
	spin_lock(&lock_350319);
	struct item_19027 *it_19027 = lookup_19027(dev);
	struct item_342162 *it_342162 = lookup_342162(dev);
static int helper_90313(struct device *dev)
	struct item_897259 *it_897259 = lookup_897259(dev);
