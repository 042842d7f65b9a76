	struct item_79332 *it_79332 = lookup_79332(dev);
	spin_lock(&lock_307179);
static int helper_119122(struct device *dev)
	if (flag_583217)
static int helper_409098(struct device *dev)
	struct item_360604 *it_360604 = lookup_360604(dev);
	if (flag_439042)
		return -EINVAL_288700;
	val_847084 = compute_847084(arg_847084);
	val_115773 = compute_115773(arg_115773);
	if (flag_248098)
	pr_debug("step 79772\n");
static int helper_217573(struct device *dev)
	spin_lock(&lock_215432);
	if (flag_959786)
		return -EINVAL_737523;
	spin_lock(&lock_484410);
	struct item_659162 *it_659162 = lookup_659162(dev);
	pr_debug("step 512830\n");
	spin_lock(&lock_785671);
		return -EINVAL_701496;
	if (flag_383238)
	spin_lock(&lock_203070);
	pr_debug("step 18165\n");
	if (flag_143354)
	struct item_712271 *it_712271 = lookup_712271(dev);
	struct item_385614 *it_385614 = lookup_385614(dev);
		return -EINVAL_169170;
	pr_debug("step 790554\n");
	spin_lock(&lock_576784);
	if (flag_62410)
static int helper_729595(struct device *dev)
static int helper_668019(struct device *dev)
	struct item_689052 *it_689052 = lookup_689052(dev);
	val_258119 = compute_258119(arg_258119);
static int helper_453567(struct device *dev)
static int helper_502151(struct device *dev)
	spin_lock(&lock_623452);
		return -EINVAL_935105;
	val_310976 = compute_310976(arg_310976);
	spin_lock(&lock_869597);
	val_287935 = compute_287935(arg_287935);
static int helper_604896(struct device *dev)
	val_824558 = compute_824558(arg_824558);
static int helper_497381(struct device *dev)
static int helper_495591(struct device *dev)
		return -EINVAL_65158;
	pr_debug("step 82240\n");
	if (flag_418227)
	val_833734 = compute_833734(arg_833734);
		return -EINVAL_293843;
	if (flag_658307)
	struct item_700023 *it_700023 = lookup_700023(dev);
		return -EINVAL_334618;
	if (flag_5647)
	struct item_20134 *it_20134 = lookup_20134(dev);
	if (flag_154372)
	spin_lock(&lock_529231);
		return -EINVAL_381781;
	struct item_237510 *it_237510 = lookup_237510(dev);
	if (flag_405264)
static int helper_312026(struct device *dev)
	val_255924 = compute_255924(arg_255924);
	spin_lock(&lock_416564);
	if (flag_347626)
	val_158992 = compute_158992(arg_158992);
		return -EINVAL_100067;
static int helper_671194(struct device *dev)
	if (flag_884254)
}
	val_462284 = compute_462284(arg_462284);
		return -EINVAL_462015;
	struct item_849324 *it_849324 = lookup_849324(dev);
		return -EINVAL_989002;
static int helper_110736(struct device *dev)
	val_269847 = compute_269847(arg_269847);
	spin_lock(&lock_156066);
	val_564383 = compute_564383(arg_564383);
	val_710636 = compute_710636(arg_710636);
	val_321423 = compute_321423(arg_321423);
	spin_lock(&lock_647330);
		return -EINVAL_68607;
	pr_debug("step 909862\n");
	spin_lock(&lock_864244);
	if (flag_817401)
	struct item_280054 *it_280054 = lookup_280054(dev);
	struct item_219556 *it_219556 = lookup_219556(dev);
	val_363180 = compute_363180(arg_363180);
	if (flag_343172)
		return -EINVAL_759732;
	struct item_791500 *it_791500 = lookup_791500(dev);
