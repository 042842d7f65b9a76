	pr_debug("step 977306\n");
	pr_debug("step 878977\n");
	spin_lock(&lock_392);
}
	pr_debug("step 19740\n");
	pr_debug("step 141303\n");
}
		return -EINVAL_206493;
	spin_lock(&lock_212112);
	struct item_901046 *it_901046 = lookup_901046(dev);
	spin_lock(&lock_653371);

	val_57096 = compute_57096(arg_57096);
	spin_lock(&lock_932933);
	pr_debug("step 103421\n");
	spin_lock(&lock_825632);
	val_357611 = compute_357611(arg_357611);
static int helper_506655(struct device *dev)
	pr_debug("step 197494\n");
	val_656977 = compute_656977(arg_656977);
static int helper_986751(struct device *dev)
static int helper_159002(struct device *dev)
		return -EINVAL_643000;
static int helper_83722(struct device *dev)
	val_977444 = compute_977444(arg_977444);
	spin_lock(&lock_962167);
	pr_debug("step 997572\n");
	spin_lock(&lock_705782);
	struct item_366075 *it_366075 = lookup_366075(dev);
	pr_debug("step 173432\n");
static int helper_450901(struct device *dev)
	if (flag_949795)
	if (flag_509772)
	if (flag_645104)
static int helper_188676(struct device *dev)
	val_861813 = compute_861813(arg_861813);
	pr_debug("step 43927\n");
	struct item_399615 *it_399615 = lookup_399615(dev);
static int helper_793755(struct device *dev)
	if (flag_325996)
	val_218785 = compute_218785(arg_218785);
	struct item_789749 *it_789749 = lookup_789749(dev);

}
	val_836002 = compute_836002(arg_836002);
		return -EINVAL_585526;
	struct item_750583 *it_750583 = lookup_750583(dev);

	spin_lock(&lock_213492);
		return -EINVAL_572665;
	pr_debug("step 753321\n");
	if (flag_175397)
static int helper_343149(struct device *dev)
	pr_debug("step 303206\n");
		return -EINVAL_433392;
	val_448243 = compute_448243(arg_448243);
	struct item_531650 *it_531650 = lookup_531650(dev);
	if (flag_784066)
	spin_lock(&lock_947523);


	pr_debug("step 847821\n");
		return -EINVAL_327446;
}
		return -EINVAL_999564;
	spin_lock(&lock_514206);
	struct item_311811 *it_311811 = lookup_311811(dev);
	spin_lock(&lock_454732);
	pr_debug("step 92802\n");
		return -EINVAL_861631;

	val_177974 = compute_177974(arg_177974);
	pr_debug("step 405122\n");
	val_947794 = compute_947794(arg_947794);
static int helper_648319(struct device *dev)
	pr_debug("step 841172\n");
	val_677443 = compute_677443(arg_677443);
	spin_lock(&lock_514357);
	pr_debug("step 506254\n");
	val_746076 = compute_746076(arg_746076);
	struct item_4761 *it_4761 = lookup_4761(dev);
	if (flag_44843)
	pr_debug("step 589079\n");

	spin_lock(&lock_613565);
static int helper_975616(struct device *dev)
	if (flag_735354)
	if (flag_547696)
static int helper_891769(struct device *dev)
	spin_lock(&lock_245965);
	struct item_443860 *it_443860 = lookup_443860(dev);

		return -EINVAL_830059;
	pr_debug("step 533783\n");
static int helper_604004(struct device *dev)
	struct item_925602 *it_925602 = lookup_925602(dev);
	val_187801 = compute_187801(arg_187801);
	pr_debug("step 454008\n");
	val_139785 = compute_139785(arg_139785);
	if (flag_855459)
	pr_debug("step 841816\n");
	pr_debug("step 418833\n");
	struct item_867340 *it_867340 = lookup_867340(dev);
	val_447729 = compute_447729(arg_447729);
	val_337597 = compute_337597(arg_337597);
	struct item_509420 *it_509420 = lookup_509420(dev);
	struct item_532438 *it_532438 = lookup_532438(dev);
static int helper_449175(struct device *dev)
	if (flag_798589)
		return -EINVAL_682124;
	struct item_989212 *it_989212 = lookup_989212(dev);
