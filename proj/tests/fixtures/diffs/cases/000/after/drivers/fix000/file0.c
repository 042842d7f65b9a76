		return -EINVAL_302556;
	spin_lock(&lock_200052);
	spin_lock(&lock_463295);
	spin_lock(&lock_391748);
		return -EINVAL_781066;
}

static int helper_389878(struct device *dev)
	val_27831 = compute_27831(arg_27831);
	struct item_981915 *it_981915 = lookup_981915(dev);
	val_204888 = compute_204888(arg_204888);
	if (flag_820255)
		return -EINVAL_459792;
	if (flag_842511)
	val_63350 = compute_63350(arg_63350);
	val_81605 = compute_81605(arg_81605);
}
	spin_lock(&lock_277825);
	val_530770 = compute_530770(arg_530770);

	spin_lock(&lock_70761);
	pr_debug("step 407892\n");
		return -EINVAL_785491;
static int helper_757349(struct device *dev)
static int helper_67614(struct device *dev)
	if (flag_490975)
