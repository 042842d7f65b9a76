static int helper_760007(struct device *dev)
	spin_lock(&lock_89338);
	struct item_951045 *it_951045 = lookup_951045(dev);
	struct item_849738 *it_849738 = lookup_849738(dev);
static int helper_664934(struct device *dev)
	pr_debug("step 564050\n");
static int helper_565796(struct device *dev)
static int helper_404699(struct device *dev)
	val_421837 = compute_421837(arg_421837);
	if (flag_789985)
	if (flag_19354)
static int helper_510673(struct device *dev)
	pr_debug("step 818939\n");
	pr_debug("step 703805\n");
static int helper_138396(struct device *dev)
	pr_debug("step 829895\n");
	val_832516 = compute_832516(arg_832516);
	val_608280 = compute_608280(arg_608280);
}
		return -EINVAL_484703;
static int helper_778600(struct device *dev)
	if (flag_797023)
	struct item_153266 *it_153266 = lookup_153266(dev);
	if (flag_21655)
	val_875481 = compute_875481(arg_875481);
	if (flag_174106)
static int helper_45762(struct device *dev)
	spin_lock(&lock_987942);

	val_986597 = compute_986597(arg_986597);
	if (flag_540792)
	struct item_274983 *it_274983 = lookup_274983(dev);
