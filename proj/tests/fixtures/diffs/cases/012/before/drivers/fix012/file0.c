		return -EINVAL_711664;
		return -EINVAL_677854;
		return -EINVAL_602424;
	spin_lock(&lock_7451);
	val_964078 = compute_964078(arg_964078);
	spin_lock(&lock_327146);
	if (flag_547856)
		return -EINVAL_493322;
	spin_lock(&lock_459477);
	spin_lock(&lock_787881);
	struct item_504147 *it_504147 = lookup_504147(dev);
		return -EINVAL_12716;
	struct item_450308 *it_450308 = lookup_450308(dev);
	if (flag_529495)
	pr_debug("step 817265\n");
	if (flag_868307)
		return -EINVAL_581564;
		return -EINVAL_187498;
	if (flag_178664)

	if (flag_726097)
	val_151233 = compute_151233(arg_151233);
	if (flag_410679)
	val_141093 = compute_141093(arg_141093);
	if (flag_546008)
	pr_debug("step 791172\n");
	val_273327 = compute_273327(arg_273327);
static int helper_176162(struct device *dev)
	val_304387 = compute_304387(arg_304387);
