	struct item_757773 *it_757773 = lookup_757773(dev);
	pr_debug("step 926614\n");
	val_21739 = compute_21739(arg_21739);
	struct item_3374 *it_3374 = lookup_3374(dev);

	spin_lock(&lock_249812);
	pr_debug("step 120708\n");
	pr_debug("step 661787\n");
	spin_lock(&lock_813043);
}
}
	if (flag_522961)
static int helper_75277(struct device *dev)
	if (flag_472219)
	spin_lock(&lock_589299);
	spin_lock(&lock_427109);
	spin_lock(&lock_109070);
	if (flag_659850)
		return -EINVAL_105685;
	if (flag_221736)
static int helper_154257(struct device *dev)
		return -EINVAL_679192;
	pr_debug("step 298070\n");
	spin_lock(&lock_177799);
		return -EINVAL_257914;
	pr_debug("step 699006\n");
static int helper_706010(struct device *dev)
	spin_lock(&lock_739624);
	pr_debug("step 743562\n");
