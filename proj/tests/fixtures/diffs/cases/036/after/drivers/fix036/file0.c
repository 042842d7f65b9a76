static int helper_908570(struct device *dev)

	if (flag_997853)

		return -EINVAL_717818;
}
	if (flag_583866)
static int helper_665947(struct device *dev)
	val_269125 = compute_269125(arg_269125);
	spin_lock(&lock_246564);
	val_601033 = compute_601033(arg_601033);
	val_41693 = compute_41693(arg_41693);
static int helper_864794(struct device *dev)
	struct item_57166 *it_57166 = lookup_57166(dev);
	struct item_821990 *it_821990 = lookup_821990(dev);
		return -EINVAL_590916;
	val_355640 = compute_355640(arg_355640);
		return -EINVAL_30161;
	pr_debug("step 837876\n");
	spin_lock(&lock_460395);
	val_354733 = compute_354733(arg_354733);
	struct item_716907 *it_716907 = lookup_716907(dev);
	struct item_92389 *it_92389 = lookup_92389(dev);
static int helper_59563(struct device *dev)
		return -EINVAL_625567;
	if (flag_492692)
	spin_lock(&lock_912224);
	val_964939 = compute_964939(arg_964939);
static int helper_520855(struct device *dev)
		return -EINVAL_638404;
	if (flag_441468)
	val_240132 = compute_240132(arg_240132);
	val_833471 = compute_833471(arg_833471);
	spin_lock(&lock_498269);