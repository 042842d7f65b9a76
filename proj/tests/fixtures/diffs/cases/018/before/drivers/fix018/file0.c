	pr_debug("step 138885\n");
	struct item_609507 *it_609507 = lookup_609507(dev);
static int helper_740738(struct device *dev)
	val_8344 = compute_8344(arg_8344);
	spin_lock(&lock_300852);
	pr_debug("step 465068\n");
	spin_lock(&lock_672649);
	spin_lock(&lock_851729);
static int helper_505880(struct device *dev)
	if (flag_973026)
	struct item_193338 *it_193338 = lookup_193338(dev);
	if (flag_370426)
	if (flag_284488)
	val_491850 = compute_491850(arg_491850);
	pr_debug("step 110720\n");
static int helper_298430(struct device *dev)
	struct item_323650 *it_323650 = lookup_323650(dev);

	struct item_487424 *it_487424 = lookup_487424(dev);
	pr_debug("step 365282\n");
	if (flag_578539)
static int helper_403437(struct device *dev)
}
	if (flag_899969)

	if (flag_971388)
static int helper_320349(struct device *dev)
	spin_lock(&lock_504242);
	if (flag_62549)
	struct item_808455 *it_808455 = lookup_808455(dev);
	pr_debug("step 714506\n");
	if (flag_895981)
	spin_lock(&lock_627805);
	val_456947 = compute_456947(arg_456947);
	if (flag_48581)
	struct item_141407 *it_141407 = lookup_141407(dev);
		return -EINVAL_82128;
	val_84838 = compute_84838(arg_84838);
	if (flag_235757)
static int helper_628549(struct device *dev)
	struct item_242562 *it_242562 = lookup_242562(dev);
	if (flag_259290)
		return -EINVAL_375483;
	pr_debug("step 833213\n");
	spin_lock(&lock_839189);
	if (flag_332245)
	spin_lock(&lock_443306);
	spin_lock(&lock_23959);
}
	val_356200 = compute_356200(arg_356200);
static int helper_484070(struct device *dev)
	pr_debug("step 983512\n");
	if (flag_554709)
	struct item_865365 *it_865365 = lookup_865365(dev);
}
	struct item_543315 *it_543315 = lookup_543315(dev);
	spin_lock(&lock_720741);
static int helper_133934(struct device *dev)
	pr_debug("step 60427\n");
		return -EINVAL_57381;
	if (flag_725322)
	spin_lock(&lock_102574);
	if (flag_269349)
}
		return -EINVAL_903303;
	if (flag_667542)
	if (flag_6496)
