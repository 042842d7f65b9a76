		return -EINVAL_381699;
	spin_lock(&lock_965317);
	struct item_679403 *it_679403 = lookup_679403(dev);
static int helper_408945(struct device *dev)
	struct item_349793 *it_349793 = lookup_349793(dev);
	val_127637 = compute_127637(arg_127637);

	pr_debug("step 724577\n");
	spin_lock(&lock_423405);
	struct item_340820 *it_340820 = lookup_340820(dev);
static int helper_888276(struct device *dev)
	spin_lock(&lock_369857);
		return -EINVAL_246559;
	struct item_725899 *it_725899 = lookup_725899(dev);

	pr_debug("step 450987\n");
static int helper_395483(struct device *dev)
	if (flag_918447)
		return -EINVAL_947556;
}
	if (flag_681108)
	pr_debug("step 293080\n");
	val_105511 = compute_105511(arg_105511);
		return -EINVAL_183210;
	val_44606 = compute_44606(arg_44606);
	struct item_640308 *it_640308 = lookup_640308(dev);
	spin_lock(&lock_330007);
		return -EINVAL_921342;
	val_602706 = compute_602706(arg_602706);
	spin_lock(&lock_834624);
	spin_lock(&lock_196226);
	struct item_883912 *it_883912 = lookup_883912(dev);
	spin_lock(&lock_912163);

	if (flag_778708)
	struct item_797084 *it_797084 = lookup_797084(dev);
		return -EINVAL_530686;
	if (flag_270658)
	pr_debug("step 678094\n");
		return -EINVAL_542150;
	struct item_718671 *it_718671 = lookup_718671(dev);
	pr_debug("step 101748\n");
	if (flag_19459)
	if (flag_831877)
	val_25963 = compute_25963(arg_25963);
	struct item_65334 *it_65334 = lookup_65334(dev);
	val_145099 = compute_145099(arg_145099);

	struct item_733580 *it_733580 = lookup_733580(dev);
	if (flag_879354)
	spin_lock(&lock_52504);
	val_234554 = compute_234554(arg_234554);
	struct item_472083 *it_472083 = lookup_472083(dev);
	pr_debug("step 338621\n");
	pr_debug("step 389635\n");
	if (flag_950933)
		return -EINVAL_142938;
		return -EINVAL_329132;
	if (flag_907314)
	val_461400 = compute_461400(arg_461400);
	if (flag_17771)
	pr_debug("step 662694\n");
		return -EINVAL_405483;
	if (flag_687456)
	spin_lock(&lock_859753);
	if (flag_776883)
		return -EINVAL_456929;
	struct item_786664 *it_786664 = lookup_786664(dev);
		return -EINVAL_604009;
	val_118241 = compute_118241(arg_118241);

	struct item_142324 *it_142324 = lookup_142324(dev);
	pr_debug("step 797642\n");
static int helper_131571(struct device *dev)
	pr_debug("step 393457\n");
		return -EINVAL_985895;

	spin_lock(&lock_574133);
	struct item_361713 *it_361713 = lookup_361713(dev);
		return -EINVAL_243036;
	pr_debug("step 25359\n");
	spin_lock(&lock_274504);
	struct item_683786 *it_683786 = lookup_683786(dev);
	val_593685 = compute_593685(arg_593685);
	pr_debug("step 628953\n");

	struct item_133267 *it_133267 = lookup_133267(dev);
		return -EINVAL_241563;
static int helper_24991(struct device *dev)
		return -EINVAL_731239;
	val_249677 = compute_249677(arg_249677);
	struct item_370270 *it_370270 = lookup_370270(dev);
		return -EINVAL_227398;
	pr_debug("step 818310\n");
	if (flag_812089)
static int helper_863686(struct device *dev)
	spin_lock(&lock_9059);
		return -EINVAL_439271;
	val_887126 = compute_887126(arg_887126);
		return -EINVAL_225478;
	if (flag_959516)
static int helper_132920(struct device *dev)
		return -EINVAL_458115;

	struct item_797815 *it_797815 = lookup_797815(dev);
	struct item_968788 *it_968788 = lookup_968788(dev);
	struct item_528210 *it_528210 = lookup_528210(dev);
	val_521620 = compute_521620(arg_521620);
static int helper_904466(struct device *dev)
	pr_debug("step 16568\n");
	val_114997 = compute_114997(arg_114997);
	struct item_194297 *it_194297 = lookup_194297(dev);
	struct item_174302 *it_174302 = lookup_174302(dev);
	spin_lock(&lock_286434);
	pr_debug("step 136709\n");
	spin_lock(&lock_238463);
	pr_debug("step 919568\n");
	val_201835 = compute_201835(arg_201835);
	val_741422 = compute_741422(arg_741422);
	struct item_361991 *it_361991 = lookup_361991(dev);
	if (flag_875167)
