		return -EINVAL_147871;
	struct item_747643 *it_747643 = lookup_747643(dev);
	struct item_542756 *it_542756 = lookup_542756(dev);
	val_633758 = compute_633758(arg_633758);
	struct item_661069 *it_661069 = lookup_661069(dev);
	struct item_100655 *it_100655 = lookup_100655(dev);
	struct item_16018 *it_16018 = lookup_16018(dev);
	val_796052 = compute_796052(arg_796052);
	if (flag_97652)
	spin_lock(&lock_243914);
	spin_lock(&lock_681784);
static int helper_776920(struct device *dev)
	pr_debug("step 555916\n");
	val_801131 = compute_801131(arg_801131);
	spin_lock(&lock_423535);
	spin_lock(&lock_906551);
	if (flag_934453)
static int helper_961891(struct device *dev)
	spin_lock(&lock_760047);
	val_794587 = compute_794587(arg_794587);
	spin_lock(&lock_427853);
	struct item_587067 *it_587067 = lookup_587067(dev);
		return -EINVAL_387530;
		return -EINVAL_841488;
		return -EINVAL_353843;
	val_811751 = compute_811751(arg_811751);
	if (flag_378441)
	val_937410 = compute_937410(arg_937410);
	val_345687 = compute_345687(arg_345687);
static int helper_295870(struct device *dev)
	struct item_504688 *it_504688 = lookup_504688(dev);
	pr_debug("step 528024\n");
	if (flag_579769)
	if (flag_849429)
	val_185955 = compute_185955(arg_185955);
	if (flag_350438)
	struct item_627931 *it_627931 = lookup_627931(dev);
	if (flag_197934)
	struct item_928182 *it_928182 = lookup_928182(dev);
	spin_lock(&lock_784154);
	struct item_859628 *it_859628 = lookup_859628(dev);
	val_161757 = compute_161757(arg_161757);
	val_474580 = compute_474580(arg_474580);
		return -EINVAL_403649;
	pr_debug("step 399730\n");
	spin_lock(&lock_969762);
	pr_debug("step 716322\n");
	spin_lock(&lock_426828);
	val_932028 = compute_932028(arg_932028);
static int helper_337430(struct device *dev)
	struct item_383497 *it_383497 = lookup_383497(dev);
		return -EINVAL_186433;
static int helper_930636(struct device *dev)
	pr_debug("step 708970\n");
static int helper_133463(struct device *dev)
	val_247657 = compute_247657(arg_247657);
	spin_lock(&lock_631421);
	if (flag_654577)
	pr_debug("step 288250\n");
	val_227756 = compute_227756(arg_227756);
	if (flag_745891)
	val_144115 = compute_144115(arg_144115);
		return -EINVAL_935362;
	if (flag_102718)
}
	struct item_568151 *it_568151 = lookup_568151(dev);
	struct item_508865 *it_508865 = lookup_508865(dev);
	spin_lock(&lock_560475);
}
		return -EINVAL_140557;
	if (flag_706631)
	pr_debug("step 879819\n");
		return -EINVAL_600395;
	if (flag_820866)
static int helper_515310(struct device *dev)
		return -EINVAL_177799;
	val_564900 = compute_564900(arg_564900);
	pr_debug("step 577340\n");
}
	val_797479 = compute_797479(arg_797479);
static int helper_459932(struct device *dev)
	val_197470 = compute_197470(arg_197470);
		return -EINVAL_134596;
static int helper_612059(struct device *dev)
static int helper_869064(struct device *dev)
		return -EINVAL_702201;
		return -EINVAL_861156;
static int helper_487758(struct device *dev)

	if (flag_841384)
