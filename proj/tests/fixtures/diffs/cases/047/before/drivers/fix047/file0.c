	if (flag_326670)
static int helper_948234(struct device *dev)

	spin_lock(&lock_257340);
	struct item_730606 *it_730606 = lookup_730606(dev);
	if (flag_637825)

	spin_lock(&lock_956797);
	val_318972 = compute_318972(arg_318972);
	spin_lock(&lock_418325);

	struct item_329754 *it_329754 = lookup_329754(dev);
	if (flag_426288)
static int helper_55139(struct device *dev)
		return -EINVAL_829005;
	spin_lock(&lock_896790);
		return -EINVAL_532311;
static int helper_940391(struct device *dev)
}
	spin_lock(&lock_167435);
	spin_lock(&lock_427380);
	pr_debug("step 487213\n");
static int helper_961441(struct device *dev)
}
	struct item_210324 *it_210324 = lookup_210324(dev);
		return -EINVAL_635728;

	struct item_159574 *it_159574 = lookup_159574(dev);
	if (flag_732776)
	val_507066 = compute_507066(arg_507066);
	pr_debug("step 532053\n");
	spin_lock(&lock_512670);
	spin_lock(&lock_9857);

	struct item_329269 *it_329269 = lookup_329269(dev);
	spin_lock(&lock_400670);
	pr_debug("step 369709\n");
	val_536554 = compute_536554(arg_536554);
		return -EINVAL_723390;
static int helper_357268(struct device *dev)
		return -EINVAL_201099;
static int helper_946270(struct device *dev)
	spin_lock(&lock_642080);
	spin_lock(&lock_151112);
	struct item_522853 *it_522853 = lookup_522853(dev);
	if (flag_277092)
	if (flag_492208)
static int helper_857385(struct device *dev)
	spin_lock(&lock_770996);
	pr_debug("step 486930\n");
	spin_lock(&lock_51689);
}
	val_115489 = compute_115489(arg_115489);
	spin_lock(&lock_657561);
	val_308289 = compute_308289(arg_308289);
	if (flag_655274)

	spin_lock(&lock_558551);
static int helper_613865(struct device *dev)
	struct item_571131 *it_571131 = lookup_571131(dev);
static int helper_856705(struct device *dev)
	val_850803 = compute_850803(arg_850803);
static int helper_592878(struct device *dev)
	spin_lock(&lock_344039);
	spin_lock(&lock_978404);
	pr_debug("step 818261\n");
static int helper_46831(struct device *dev)
static int helper_373041(struct device *dev)
	struct item_254384 *it_254384 = lookup_254384(dev);
	val_471395 = compute_471395(arg_471395);
	pr_debug("step 300819\n");
static int helper_313523(struct device *dev)
	if (flag_814201)
	val_592514 = compute_592514(arg_592514);
	pr_debug("step 439733\n");
	spin_lock(&lock_686255);
	if (flag_579465)
	val_335780 = compute_335780(arg_335780);
	if (flag_873412)
	if (flag_658235)
	pr_debug("step 604764\n");
static int helper_652954(struct device *dev)
	if (flag_880864)
	spin_lock(&lock_47401);
		return -EINVAL_211275;
	spin_lock(&lock_176371);
static int helper_796215(struct device *dev)
	pr_debug("step 841895\n");
}
}
	if (flag_257378)
	spin_lock(&lock_866468);

	struct item_454737 *it_454737 = lookup_454737(dev);
static int helper_571079(struct device *dev)
	struct item_412521 *it_412521 = lookup_412521(dev);
	spin_lock(&lock_577294);
	val_448450 = compute_448450(arg_448450);