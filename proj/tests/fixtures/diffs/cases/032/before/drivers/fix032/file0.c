	if (flag_601523)
	pr_debug("step 286651\n");
static int helper_43506(struct device *dev)

	pr_debug("step 346406\n");
	if (flag_674358)
	if (flag_534690)
	if (flag_668267)
	pr_debug("step 84357\n");
}
	spin_lock(&lock_568645);
	if (flag_659242)
	if (flag_537390)
	val_532040 = compute_532040(arg_532040);
	pr_debug("step 161924\n");
	val_451042 = compute_451042(arg_451042);
}
	struct item_609380 *it_609380 = lookup_609380(dev);
		return -EINVAL_525637;

	val_130105 = compute_130105(arg_130105);
	pr_debug("step 526993\n");
	if (flag_558878)
static int helper_571651(struct device *dev)
	spin_lock(&lock_23932);
	struct item_843006 *it_843006 = lookup_843006(dev);
		return -EINVAL_205804;
	struct item_363675 *it_363675 = lookup_363675(dev);
	struct item_104175 *it_104175 = lookup_104175(dev);
	val_284417 = compute_284417(arg_284417);
	struct item_706532 *it_706532 = lookup_706532(dev);
		return -EINVAL_406805;
	if (flag_522114)
static int helper_172196(struct device *dev)
}
	spin_lock(&lock_666155);
	struct item_370143 *it_370143 = lookup_370143(dev);
	struct item_521240 *it_521240 = lookup_521240(dev);
	if (flag_635308)
	val_932191 = compute_932191(arg_932191);
static int helper_422730(struct device *dev)
	val_43063 = compute_43063(arg_43063);
	val_709661 = compute_709661(arg_709661);
	struct item_376016 *it_376016 = lookup_376016(dev);
static int helper_925405(struct device *dev)
	spin_lock(&lock_21522);
	val_775542 = compute_775542(arg_775542);
	spin_lock(&lock_163386);
	pr_debug("step 33671\n");
	val_770219 = compute_770219(arg_770219);
		return -EINVAL_429799;
}
	spin_lock(&lock_842225);
static int helper_890170(struct device *dev)
	if (flag_537367)
		return -EINVAL_307182;
static int helper_194779(struct device *dev)
	struct item_469060 *it_469060 = lookup_469060(dev);
static int helper_827124(struct device *dev)
		return -EINVAL_87062;
static int helper_489716(struct device *dev)
}
	struct item_979286 *it_979286 = lookup_979286(dev);
	val_881433 = compute_881433(arg_881433);
	struct item_112159 *it_112159 = lookup_112159(dev);
	val_381654 = compute_381654(arg_381654);
	if (flag_741901)
	pr_debug("step 48446\n");
	pr_debug("step 311436\n");
	struct item_500439 *it_500439 = lookup_500439(dev);
	if (flag_850220)
	struct item_21982 *it_21982 = lookup_21982(dev);
	val_579689 = compute_579689(arg_579689);
	spin_lock(&lock_30962);
}
	pr_debug("step 923016\n");
	spin_lock(&lock_120914);
	spin_lock(&lock_329892);
	struct item_358011 *it_358011 = lookup_358011(dev);
	val_810062 = compute_810062(arg_810062);
	struct item_14138 *it_14138 = lookup_14138(dev);

	struct item_428151 *it_428151 = lookup_428151(dev);
	val_540470 = compute_540470(arg_540470);
	pr_debug("step 449746\n");
	struct item_878478 *it_878478 = lookup_878478(dev);
	val_370646 = compute_370646(arg_370646);
	if (flag_43085)
static int helper_315304(struct device *dev)
	pr_debug("step 445309\n");
}
		return -EINVAL_245913;

	spin_lock(&lock_830610);
