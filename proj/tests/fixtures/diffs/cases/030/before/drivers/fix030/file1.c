		return -EINVAL_643538;
	if (flag_483318)
		return -EINVAL_130192;
}

	spin_lock(&lock_501535);
	val_604026 = compute_604026(arg_604026);
	pr_debug("step 857128\n");
		return -EINVAL_688087;
		return -EINVAL_350427;
	val_199451 = compute_199451(arg_199451);
		return -EINVAL_48834;
	spin_lock(&lock_68243);
	val_436815 = compute_436815(arg_436815);
	pr_debug("step 384048\n");
		return -EINVAL_835487;
static int helper_753277(struct device *dev)
	struct item_245642 *it_245642 = lookup_245642(dev);
	spin_lock(&lock_414740);
static int helper_34686(struct device *dev)
		return -EINVAL_299433;
		return -EINVAL_528002;
	pr_debug("step 940159\n");
static int helper_259418(struct device *dev)
	spin_lock(&lock_237378);
	struct item_484443 *it_484443 = lookup_484443(dev);
	if (flag_435111)
	if (flag_378971)
	pr_debug("step 882634\n");
	spin_lock(&lock_592352);

