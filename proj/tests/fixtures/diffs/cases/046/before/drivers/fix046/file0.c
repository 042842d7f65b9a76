	if (flag_718479)

	if (flag_777940)
	struct item_332836 *it_332836 = lookup_332836(dev);
}
	val_777662 = compute_777662(arg_777662);
	val_635028 = compute_635028(arg_635028);
	val_774233 = compute_774233(arg_774233);
	pr_debug("step 793307\n");
	if (flag_644024)
	val_543465 = compute_543465(arg_543465);
static int helper_121396(struct device *dev)
static int helper_63441(struct device *dev)
	struct item_802473 *it_802473 = lookup_802473(dev);
static int helper_840895(struct device *dev)
}

	spin_lock(&lock_591384);
	pr_debug("step 230273\n");
		return -EINVAL_345260;
	spin_lock(&lock_940052);
	struct item_172364 *it_172364 = lookup_172364(dev);
	val_229407 = compute_229407(arg_229407);
	pr_debug("step 391462\n");
	val_263032 = compute_263032(arg_263032);
	if (flag_500357)
	if (flag_39266)
	struct item_812510 *it_812510 = lookup_812510(dev);
static int helper_188832(struct device *dev)
	val_128594 = compute_128594(arg_128594);
	struct item_942133 *it_942133 = lookup_942133(dev);
	spin_lock(&lock_448888);
		return -EINVAL_685024;
	pr_debug("step 100139\n");
}
static int helper_28500(struct device *dev)
	if (flag_744132)
	pr_debug("step 947833\n");

	val_131634 = compute_131634(arg_131634);
static int helper_286374(struct device *dev)
}


	if (flag_800166)


	struct item_883473 *it_883473 = lookup_883473(dev);
		return -EINVAL_944089;
	if (flag_496833)
		return -EINVAL_700948;
	spin_lock(&lock_782120);
		return -EINVAL_535848;
	spin_lock(&lock_622041);
static int helper_785022(struct device *dev)
	if (flag_801446)

		return -EINVAL_297401;
	if (flag_393124)
	val_729743 = compute_729743(arg_729743);

	spin_lock(&lock_409712);
		return -EINVAL_528340;
	pr_debug("step 747859\n");
	struct item_43562 *it_43562 = lookup_43562(dev);
	pr_debug("step 278139\n");
}
	struct item_26175 *it_26175 = lookup_26175(dev);
static int helper_936501(struct device *dev)
	spin_lock(&lock_160575);
	val_452478 = compute_452478(arg_452478);
		return -EINVAL_151576;
	spin_lock(&lock_438090);
	pr_debug("step 470135\n");
	if (flag_700612)
	pr_debug("step 582741\n");
	pr_debug("step 322855\n");
	val_128354 = compute_128354(arg_128354);
	spin_lock(&lock_725168);
	val_900655 = compute_900655(arg_900655);
	pr_debug("step 245988\n");
	if (flag_531212)
	val_868851 = compute_868851(arg_868851);
	pr_debug("step 979165\n");
	pr_debug("step 62940\n");
	if (flag_84198)
	val_125991 = compute_125991(arg_125991);
	val_422743 = compute_422743(arg_422743);
	pr_debug("step 812113\n");
static int helper_745215(struct device *dev)
	val_280622 = compute_280622(arg_280622);
	val_178360 = compute_178360(arg_178360);
	val_663166 = compute_663166(arg_663166);
		return -EINVAL_345453;

	spin_lock(&lock_922553);
	if (flag_870724)
	pr_debug("step 412146\n");
		return -EINVAL_864054;
