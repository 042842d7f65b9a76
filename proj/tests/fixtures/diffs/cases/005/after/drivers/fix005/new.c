	if (flag_976351)
	if (flag_239620)
	pr_debug("step 575375\n");
}
	spin_lock(&lock_200549);
static int helper_277061(struct device *dev)
	spin_lock(&lock_701853);
	pr_debug("step 821675\n");
static int helper_201419(struct device *dev)
