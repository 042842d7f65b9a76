	pr_debug("step 64638\n");
	pr_debug("step 505647\n");
	val_944969 = compute_944969(arg_944969);
	struct item_458654 *it_458654 = lookup_458654(dev);
	pr_debug("step 88963\n");
	val_821644 = compute_821644(arg_821644);
	if (flag_791573)
	spin_lock(&lock_876863);
	struct item_821080 *it_821080 = lookup_821080(dev);
	spin_lock(&lock_461491);
static int helper_574167(struct device *dev)
	struct item_554853 *it_554853 = lookup_554853(dev);
		return -EINVAL_15271;
static int helper_759292(struct device *dev)
	spin_lock(&lock_380657);
	struct item_755047 *it_755047 = lookup_755047(dev);
	spin_lock(&lock_390339);
	val_523522 = compute_523522(arg_523522);
}
}
static int helper_432441(struct device *dev)
	spin_lock(&lock_48852);
	val_885590 = compute_885590(arg_885590);
		return -EINVAL_360628;
		return -EINVAL_387216;
	spin_lock(&lock_880859);
	struct item_17814 *it_17814 = lookup_17814(dev);
	spin_lock(&lock_544610);
	if (flag_321175)
	pr_debug("step 712236\n");
	pr_debug("step 143442\n");
	if (flag_713399)
	spin_lock(&lock_171076);
	if (flag_173305)
	val_821553 = compute_821553(arg_821553);
	struct item_453999 *it_453999 = lookup_453999(dev);

	if (flag_856858)
	spin_lock(&lock_401831);
	if (flag_95783)
		return -EINVAL_607594;
	val_245951 = compute_245951(arg_245951);
	spin_lock(&lock_307269);
	spin_lock(&lock_296440);

	pr_debug("step 664648\n");
	val_935402 = compute_935402(arg_935402);
		return -EINVAL_91036;
	struct item_436955 *it_436955 = lookup_436955(dev);
	pr_debug("step 168980\n");
	val_124904 = compute_124904(arg_124904);
	spin_lock(&lock_24338);
}
	if (flag_101505)
		return -EINVAL_980740;
	val_618117 = compute_618117(arg_618117);
		return -EINVAL_660354;
	pr_debug("step 855476\n");
	spin_lock(&lock_739385);
	struct item_876144 *it_876144 = lookup_876144(dev);
	pr_debug("step 616260\n");
	val_299071 = compute_299071(arg_299071);
	struct item_488970 *it_488970 = lookup_488970(dev);
	spin_lock(&lock_592176);
	if (flag_623450)
		return -EINVAL_919579;
	pr_debug("step 71871\n");
	struct item_318795 *it_318795 = lookup_318795(dev);
