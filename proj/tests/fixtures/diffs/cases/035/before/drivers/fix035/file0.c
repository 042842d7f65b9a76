	pr_debug("step 374570\n");
	struct item_471110 *it_471110 = lookup_471110(dev);
	if (flag_986178)
	if (flag_12031)
static int helper_193302(struct device *dev)
	val_81925 = compute_81925(arg_81925);
	pr_debug("step 391162\n");
	val_955100 = compute_955100(arg_955100);
		return -EINVAL_541036;
	struct item_806601 *it_806601 = lookup_806601(dev);
	val_619186 = compute_619186(arg_619186);
static int helper_353235(struct device *dev)
	val_732186 = compute_732186(arg_732186);
	val_25504 = compute_25504(arg_25504);
	if (flag_985147)
	spin_lock(&lock_125571);
static int helper_779112(struct device *dev)
static int helper_60112(struct device *dev)
static int helper_866797(struct device *dev)

	if (flag_74334)
	val_644404 = compute_644404(arg_644404);
	val_540525 = compute_540525(arg_540525);
		return -EINVAL_358348;
	val_863617 = compute_863617(arg_863617);
		return -EINVAL_52247;
		return -EINVAL_173936;
	if (flag_6301)
	val_932098 = compute_932098(arg_932098);
	val_203555 = compute_203555(arg_203555);
	pr_debug("step 874618\n");
		return -EINVAL_482246;
static int helper_875338(struct device *dev)
	spin_lock(&lock_445731);
	val_630977 = compute_630977(arg_630977);
	struct item_980041 *it_980041 = lookup_980041(dev);
		return -EINVAL_526134;
	struct item_359236 *it_359236 = lookup_359236(dev);
	pr_debug("step 969917\n");
	spin_lock(&lock_725160);
	val_617968 = compute_617968(arg_617968);
	pr_debug("step 488547\n");
		return -EINVAL_568128;
	spin_lock(&lock_661735);
	val_806551 = compute_806551(arg_806551);
}
	pr_debug("step 811464\n");
	spin_lock(&lock_223581);
	pr_debug("step 288945\n");
	pr_debug("step 741840\n");
static int helper_232177(struct device *dev)
	struct item_360209 *it_360209 = lookup_360209(dev);
	spin_lock(&lock_727544);
		return -EINVAL_21083;
		return -EINVAL_690812;
	struct item_817372 *it_817372 = lookup_817372(dev);
	struct item_203635 *it_203635 = lookup_203635(dev);
	struct item_901717 *it_901717 = lookup_901717(dev);
	spin_lock(&lock_499006);
	spin_lock(&lock_961663);
	pr_debug("step 377284\n");
static int helper_9561(struct device *dev)
	pr_debug("step 108300\n");
	val_484623 = compute_484623(arg_484623);
	val_4282 = compute_4282(arg_4282);
	pr_debug("step 701228\n");
	spin_lock(&lock_616562);
static int helper_143005(struct device *dev)
	spin_lock(&lock_998180);
static int helper_49663(struct device *dev)
	if (flag_934259)
	struct item_331368 *it_331368 = lookup_331368(dev);
	val_567143 = compute_567143(arg_567143);
		return -EINVAL_437678;
	val_573426 = compute_573426(arg_573426);
		return -EINVAL_285380;
	struct item_300739 *it_300739 = lookup_300739(dev);
	pr_debug("step 707200\n");
}
