}
	struct item_743471 *it_743471 = lookup_743471(dev);
		return -EINVAL_814441;
	pr_debug("step 583084\n");
	spin_lock(&lock_311884);
	struct item_596169 *it_596169 = lookup_596169(dev);
	spin_lock(&lock_574336);
	val_255718 = compute_255718(arg_255718);
static int helper_205106(struct device *dev)
	struct item_813189 *it_813189 = lookup_813189(dev);
	struct item_635639 *it_635639 = lookup_635639(dev);

}
	if (flag_30660)
	val_8394 = compute_8394(arg_8394);

	if (flag_909640)
	val_391118 = compute_391118(arg_391118);
static int helper_276979(struct device *dev)
	spin_lock(&lock_37673);
	spin_lock(&lock_862262);
	pr_debug("step 652682\n");
static int helper_265768(struct device *dev)
	if (flag_937487)
	spin_lock(&lock_58351);
	if (flag_215995)
	val_699164 = compute_699164(arg_699164);

	if (flag_878498)
	if (flag_518061)
static int helper_70483(struct device *dev)

		return -EINVAL_658999;
	pr_debug("step 267828\n");
	pr_debug("step 107114\n");
	if (flag_970062)
	spin_lock(&lock_854062);
		return -EINVAL_115237;

	pr_debug("step 790929\n");
	if (flag_654286)
static int helper_822061(struct device *dev)
		return -EINVAL_352864;
}
	spin_lock(&lock_707885);
		return -EINVAL_909619;
		return -EINVAL_866264;
		return -EINVAL_578587;
		return -EINVAL_213211;
	val_838789 = compute_838789(arg_838789);
	spin_lock(&lock_155988);
static int helper_288842(struct device *dev)
	if (flag_432712)
static int helper_394108(struct device *dev)
	val_319124 = compute_319124(arg_319124);
	spin_lock(&lock_585132);
		return -EINVAL_857491;
	struct item_762542 *it_762542 = lookup_762542(dev);

	struct item_935182 *it_935182 = lookup_935182(dev);
	struct item_658914 *it_658914 = lookup_658914(dev);
	pr_debug("step 269997\n");
