	spin_lock(&lock_437979);
	spin_lock(&lock_436238);
static int helper_793722(struct device *dev)
	val_535467 = compute_535467(arg_535467);
	struct item_599125 *it_599125 = lookup_599125(dev);
static int helper_893045(struct device *dev)
static int helper_3035(struct device *dev)
	if (flag_976945)
	pr_debug("step 244505\n");
	struct item_84468 *it_84468 = lookup_84468(dev);
	spin_lock(&lock_330678);
		return -EINVAL_918917;

	struct item_203673 *it_203673 = lookup_203673(dev);
	spin_lock(&lock_152551);
	if (flag_327331)
	pr_debug("step 302947\n");
	val_319965 = compute_319965(arg_319965);
		return -EINVAL_553225;
static int helper_348892(struct device *dev)
	struct item_656645 *it_656645 = lookup_656645(dev);
	struct item_399202 *it_399202 = lookup_399202(dev);
	if (flag_488336)
static int helper_604763(struct device *dev)
	spin_lock(&lock_558024);
static int helper_591289(struct device *dev)
static int helper_572306(struct device *dev)
	struct item_914153 *it_914153 = lookup_914153(dev);
	spin_lock(&lock_829698);
	spin_lock(&lock_841839);
}
		return -EINVAL_9003;
static int helper_671667(struct device *dev)
		return -EINVAL_932755;
static int helper_746506(struct device *dev)
	struct item_886569 *it_886569 = lookup_886569(dev);
	if (flag_917032)
	pr_debug("step 84096\n");
	spin_lock(&lock_990969);
	val_520000 = compute_520000(arg_520000);
	if (flag_852361)
	struct item_535757 *it_535757 = lookup_535757(dev);
	struct item_860918 *it_860918 = lookup_860918(dev);
	spin_lock(&lock_267726);
	struct item_718905 *it_718905 = lookup_718905(dev);
	pr_debug("step 485115\n");
	pr_debug("step 68952\n");

	pr_debug("step 581299\n");
	spin_lock(&lock_270500);

}
		return -EINVAL_624611;
	val_931681 = compute_931681(arg_931681);
static int helper_64422(struct device *dev)
		return -EINVAL_282722;

}
	if (flag_349396)
	spin_lock(&lock_314905);
	val_829743 = compute_829743(arg_829743);
	if (flag_146033)
	spin_lock(&lock_502191);
}
static int helper_236966(struct device *dev)
	spin_lock(&lock_334158);
static int helper_671282(struct device *dev)
