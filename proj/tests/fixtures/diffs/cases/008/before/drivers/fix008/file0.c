static int helper_381431(struct device *dev)
	pr_debug("step 572553\n");
}
	pr_debug("step 214984\n");
	pr_debug("step 932282\n");
}
	val_771949 = compute_771949(arg_771949);
	pr_debug("step 773348\n");
		return -EINVAL_567163;
static int helper_873450(struct device *dev)
		return -EINVAL_957273;
		return -EINVAL_491857;
	pr_debug("step 472723\n");

		return -EINVAL_588346;
	struct item_42078 *it_42078 = lookup_42078(dev);
	pr_debug("step 153027\n");
	pr_debug("step 288932\n");
	spin_lock(&lock_594419);
	if (flag_704457)
static int helper_47808(struct device *dev)
		return -EINVAL_425576;
	if (flag_730497)
	if (flag_268890)
	spin_lock(&lock_434824);
	struct item_230945 *it_230945 = lookup_230945(dev);
	spin_lock(&lock_215570);
static int helper_631811(struct device *dev)
	pr_debug("step 542834\n");
	val_975486 = compute_975486(arg_975486);
	val_644240 = compute_644240(arg_644240);
	struct item_817447 *it_817447 = lookup_817447(dev);
		return -EINVAL_555096;
	spin_lock(&lock_100571);
	pr_debug("step 547629\n");
	struct item_531185 *it_531185 = lookup_531185(dev);
	if (flag_101882)
	pr_debug("step 951912\n");
	struct item_453874 *it_453874 = lookup_453874(dev);
	pr_debug("step 645708\n");
		return -EINVAL_991281;
	struct item_545628 *it_545628 = lookup_545628(dev);
	val_125707 = compute_125707(arg_125707);
	spin_lock(&lock_761608);
static int helper_596033(struct device *dev)
	val_702121 = compute_702121(arg_702121);
static int helper_309477(struct device *dev)
	struct item_363972 *it_363972 = lookup_363972(dev);
static int helper_276242(struct device *dev)
	if (flag_106276)
	if (flag_879091)
	struct item_761096 *it_761096 = lookup_761096(dev);
static int helper_146019(struct device *dev)
}

	struct item_628211 *it_628211 = lookup_628211(dev);
}
