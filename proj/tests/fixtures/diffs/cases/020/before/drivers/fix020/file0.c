	struct item_188863 *it_188863 = lookup_188863(dev);
	val_732678 = compute_732678(arg_732678);
	spin_lock(&lock_93172);

	struct item_724255 *it_724255 = lookup_724255(dev);
	if (flag_16090)
	struct item_622593 *it_622593 = lookup_622593(dev);
	struct item_370674 *it_370674 = lookup_370674(dev);
	spin_lock(&lock_214164);
static int helper_368682(struct device *dev)
	struct item_599724 *it_599724 = lookup_599724(dev);
	pr_debug("step 243740\n");
	spin_lock(&lock_810075);
	if (flag_757215)
	spin_lock(&lock_471909);
	struct item_903437 *it_903437 = lookup_903437(dev);
	struct item_367521 *it_367521 = lookup_367521(dev);
	val_223951 = compute_223951(arg_223951);
	pr_debug("step 865622\n");
	struct item_300152 *it_300152 = lookup_300152(dev);
		return -EINVAL_847274;
		return -EINVAL_620532;
	pr_debug("step 418427\n");
	if (flag_109370)
static int helper_501323(struct device *dev)
static int helper_228053(struct device *dev)
	if (flag_204260)
static int helper_196505(struct device *dev)

static int helper_840357(struct device *dev)
static int helper_633687(struct device *dev)
	spin_lock(&lock_432703);
	spin_lock(&lock_213846);

static int helper_746862(struct device *dev)
	if (flag_71425)
	struct item_760388 *it_760388 = lookup_760388(dev);

	pr_debug("step 357772\n");
static int helper_799950(struct device *dev)
		return -EINVAL_231911;
static int helper_373227(struct device *dev)
static int helper_248177(struct device *dev)
	spin_lock(&lock_790901);

	spin_lock(&lock_566216);
	pr_debug("step 330470\n");
	if (flag_566862)
	val_317493 = compute_317493(arg_317493);
		return -EINVAL_343086;
	if (flag_45238)
		return -EINVAL_975911;

static int helper_510385(struct device *dev)
	if (flag_31531)
	if (flag_226586)
	spin_lock(&lock_441780);
static int helper_149670(struct device *dev)
		return -EINVAL_653108;
	pr_debug("step 313128\n");
	struct item_657036 *it_657036 = lookup_657036(dev);
	pr_debug("step 435197\n");
	pr_debug("step 632107\n");

		return -EINVAL_261261;
	pr_debug("step 777258\n");
	val_330829 = compute_330829(arg_330829);
	struct item_350794 *it_350794 = lookup_350794(dev);
	if (flag_258962)
		return -EINVAL_312113;
	spin_lock(&lock_446093);
	pr_debug("step 74326\n");
static int helper_519462(struct device *dev)
	val_776522 = compute_776522(arg_776522);
	spin_lock(&lock_988429);
	spin_lock(&lock_654763);
		return -EINVAL_533614;
	if (flag_78248)
	struct item_663057 *it_663057 = lookup_663057(dev);
	struct item_343258 *it_343258 = lookup_343258(dev);
	spin_lock(&lock_458051);
		return -EINVAL_384315;
		return -EINVAL_874033;
	val_303772 = compute_303772(arg_303772);
	val_240534 = compute_240534(arg_240534);
		return -EINVAL_611373;
static int helper_208359(struct device *dev)
	spin_lock(&lock_247017);
	val_70678 = compute_70678(arg_70678);
		return -EINVAL_843090;
	pr_debug("step 157415\n");
		return -EINVAL_525597;
	spin_lock(&lock_999360);
	struct item_576365 *it_576365 = lookup_576365(dev);
	if (flag_417435)
		return -EINVAL_42695;
	val_757694 = compute_757694(arg_757694);
	spin_lock(&lock_315064);
	spin_lock(&lock_452046);
	struct item_762392 *it_762392 = lookup_762392(dev);
	spin_lock(&lock_94865);
	struct item_679529 *it_679529 = lookup_679529(dev);
		return -EINVAL_345808;
		return -EINVAL_976722;
