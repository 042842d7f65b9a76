	struct item_23682 *it_23682 = lookup_23682(dev);
	struct item_925411 *it_925411 = lookup_925411(dev);
	if (flag_93419)
	val_979306 = compute_979306(arg_979306);
		return -EINVAL_323571;
		return -EINVAL_727769;
static int helper_550472(struct device *dev)
	val_766339 = compute_766339(arg_766339);
	pr_debug("step 722749\n");
		return -EINVAL_182441;
	struct item_616971 *it_616971 = lookup_616971(dev);
}
	pr_debug("step 744085\n");
	val_425133 = compute_425133(arg_425133);

	if (flag_686430)
static int helper_889282(struct device *dev)
static int helper_8298(struct device *dev)
	val_947633 = compute_947633(arg_947633);
	val_620026 = compute_620026(arg_620026);
	pr_debug("step 660086\n");
static int helper_121819(struct device *dev)
static int helper_357375(struct device *dev)
	struct item_543024 *it_543024 = lookup_543024(dev);
	pr_debug("step 312252\n");
	spin_lock(&lock_814715);
		return -EINVAL_573629;
		return -EINVAL_549394;
		return -EINVAL_803285;
	val_836259 = compute_836259(arg_836259);
static int helper_7658(struct device *dev)

	pr_debug("step 786256\n");
	if (flag_448239)
	val_666038 = compute_666038(arg_666038);
static int helper_125543(struct device *dev)
	pr_debug("step 143688\n");
	if (flag_672918)
	spin_lock(&lock_759579);
	if (flag_188055)
	struct item_126325 *it_126325 = lookup_126325(dev);
	if (flag_933226)
	struct item_328831 *it_328831 = lookup_328831(dev);
		return -EINVAL_270525;
		return -EINVAL_412170;
	spin_lock(&lock_15458);
	pr_debug("step 330260\n");
	val_231065 = compute_231065(arg_231065);
	struct item_285260 *it_285260 = lookup_285260(dev);
	if (flag_892109)

	spin_lock(&lock_171188);
	pr_debug("step 739353\n");
	if (flag_218194)
		return -EINVAL_922510;
	struct item_456322 *it_456322 = lookup_456322(dev);
	val_584680 = compute_584680(arg_584680);
	struct item_609954 *it_609954 = lookup_609954(dev);
	spin_lock(&lock_339361);
	val_925529 = compute_925529(arg_925529);
}
	struct item_904381 *it_904381 = lookup_904381(dev);
	val_807300 = compute_807300(arg_807300);
static int helper_783611(struct device *dev)
	if (flag_573919)
	spin_lock(&lock_577342);
	pr_debug("step 145973\n");
	val_197793 = compute_197793(arg_197793);
		return -EINVAL_673678;
		return -EINVAL_64063;
		return -EINVAL_837429;
	spin_lock(&lock_612253);
		return -EINVAL_580513;
	spin_lock(&lock_481361);
static int helper_436410(struct device *dev)
	val_489723 = compute_489723(arg_489723);
	struct item_832582 *it_832582 = lookup_832582(dev);
	val_497513 = compute_497513(arg_497513);
	struct item_779060 *it_779060 = lookup_779060(dev);
	spin_lock(&lock_770024);
	val_373990 = compute_373990(arg_373990);
