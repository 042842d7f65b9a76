	struct item_161826 *it_161826 = lookup_161826(dev);
	spin_lock(&lock_992033);
	if (flag_541393)
	if (flag_292994)
	val_731871 = compute_731871(arg_731871);
		return -EINVAL_147616;
	if (flag_332715)
}
	if (flag_519407)
		return -EINVAL_408931;
	if (flag_544516)
	pr_debug("step 616137\n");
static int helper_419648(struct device *dev)
static int helper_940664(struct device *dev)
		return -EINVAL_585331;
	pr_debug("step 712693\n");
static int helper_863845(struct device *dev)
	if (flag_821794)
	if (flag_798182)
static int helper_219985(struct device *dev)
	pr_debug("step 946770\n");
	val_684231 = compute_684231(arg_684231);
		return -EINVAL_248497;
static int helper_738725(struct device *dev)
		return -EINVAL_197586;
		return -EINVAL_863185;
		return -EINVAL_710973;

	val_404118 = compute_404118(arg_404118);
	struct item_505313 *it_505313 = lookup_505313(dev);
	struct item_671540 *it_671540 = lookup_671540(dev);
static int helper_782880(struct device *dev)
	struct item_877175 *it_877175 = lookup_877175(dev);

	val_557044 = compute_557044(arg_557044);
	if (flag_437149)
		return -EINVAL_211158;
	if (flag_466751)
	val_636012 = compute_636012(arg_636012);
	pr_debug("step 703265\n");
	if (flag_608679)

	spin_lock(&lock_920011);
	spin_lock(&lock_293493);
	spin_lock(&lock_390412);
	spin_lock(&lock_432134);

	struct item_285629 *it_285629 = lookup_285629(dev);
	if (flag_765573)
}
	spin_lock(&lock_990097);
	pr_debug("step 852833\n");
	val_684207 = compute_684207(arg_684207);

	struct item_464071 *it_464071 = lookup_464071(dev);
	val_937757 = compute_937757(arg_937757);
	struct item_317209 *it_317209 = lookup_317209(dev);

	val_421876 = compute_421876(arg_421876);
	struct item_149531 *it_149531 = lookup_149531(dev);
	spin_lock(&lock_212306);
	pr_debug("step 781142\n");
		return -EINVAL_638183;
	if (flag_917175)
	if (flag_320372)
		return -EINVAL_370149;
static int helper_888100(struct device *dev)
	val_175683 = compute_175683(arg_175683);
		return -EINVAL_505457;
		return -EINVAL_723026;
	val_422981 = compute_422981(arg_422981);
static int helper_646279(struct device *dev)
		return -EINVAL_621992;
	struct item_59014 *it_59014 = lookup_59014(dev);
	pr_debug("step 478579\n");
static int helper_762482(struct device *dev)
	struct item_356411 *it_356411 = lookup_356411(dev);
}
	val_930300 = compute_930300(arg_930300);
	if (flag_512299)
	struct item_683359 *it_683359 = lookup_683359(dev);

	val_618831 = compute_618831(arg_618831);

	if (flag_468335)
		return -EINVAL_601981;
	val_245995 = compute_245995(arg_245995);
	spin_lock(&lock_146065);
	struct item_516942 *it_516942 = lookup_516942(dev);
	if (flag_263163)
