	pr_debug("step 531570\n");

	if (flag_800887)
		return -EINVAL_341337;
		return -EINVAL_300489;
	struct item_851583 *it_851583 = lookup_851583(dev);
	if (flag_370576)
	if (flag_101552)
	struct item_48450 *it_48450 = lookup_48450(dev);
	val_281897 = compute_281897(arg_281897);
	val_483691 = compute_483691(arg_483691);
	struct item_71494 *it_71494 = lookup_71494(dev);
	if (flag_467035)
static int helper_566896(struct device *dev)
static int helper_437404(struct device *dev)
	val_271580 = compute_271580(arg_271580);
	pr_debug("step 212076\n");
	pr_debug("step 379681\n");
	pr_debug("step 750120\n");
static int helper_867681(struct device *dev)
	struct item_520643 *it_520643 = lookup_520643(dev);
	struct item_924592 *it_924592 = lookup_924592(dev);
	if (flag_375032)
	struct item_63186 *it_63186 = lookup_63186(dev);
		return -EINVAL_456975;
	struct item_374949 *it_374949 = lookup_374949(dev);
	struct item_884991 *it_884991 = lookup_884991(dev);
	struct item_817364 *it_817364 = lookup_817364(dev);
	val_469396 = compute_469396(arg_469396);
	if (flag_690592)
	struct item_587949 *it_587949 = lookup_587949(dev);
		return -EINVAL_918847;
	struct item_823178 *it_823178 = lookup_823178(dev);

static int helper_825862(struct device *dev)
	pr_debug("step 414072\n");
	struct item_746090 *it_746090 = lookup_746090(dev);
	pr_debug("step 246227\n");
	spin_lock(&lock_365725);
	struct item_964029 *it_964029 = lookup_964029(dev);
}
	val_404239 = compute_404239(arg_404239);
static int helper_706289(struct device *dev)
	val_55980 = compute_55980(arg_55980);
}
		return -EINVAL_177764;

	if (flag_908863)
	if (flag_98783)
	val_611563 = compute_611563(arg_611563);
static int helper_39843(struct device *dev)
		return -EINVAL_910346;
	if (flag_29486)

	spin_lock(&lock_821478);
static int helper_899931(struct device *dev)
	pr_debug("step 834604\n");
	spin_lock(&lock_114044);
	if (flag_837425)
static int helper_182910(struct device *dev)
	struct item_489081 *it_489081 = lookup_489081(dev);
static int helper_336262(struct device *dev)
	if (flag_871985)
	if (flag_179985)
	val_502352 = compute_502352(arg_502352);
	spin_lock(&lock_194104);
	if (flag_335880)
	if (flag_156206)

	if (flag_788988)
	struct item_874419 *it_874419 = lookup_874419(dev);
	struct item_296264 *it_296264 = lookup_296264(dev);
	val_496437 = compute_496437(arg_496437);
	struct item_710710 *it_710710 = lookup_710710(dev);
static int helper_162408(struct device *dev)

	pr_debug("step 850882\n");
	pr_debug("step 127702\n");
	struct item_184039 *it_184039 = lookup_184039(dev);
	spin_lock(&lock_155957);
	val_555173 = compute_555173(arg_555173);
	val_372010 = compute_372010(arg_372010);
		return -EINVAL_205561;
	spin_lock(&lock_444677);
	if (flag_629231)
	if (flag_282234)
	struct item_520341 *it_520341 = lookup_520341(dev);
	if (flag_685851)
	struct item_81157 *it_81157 = lookup_81157(dev);
