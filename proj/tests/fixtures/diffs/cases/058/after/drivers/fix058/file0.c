	if (flag_813138)
	spin_lock(&lock_719214);
	struct item_283673 *it_283673 = lookup_283673(dev);
	struct item_427066 *it_427066 = lookup_427066(dev);
	val_651128 = compute_651128(arg_651128);
static int helper_16147(struct device *dev)
}
	spin_lock(&lock_267326);
		return -EINVAL_500244;
}
}
	val_423320 = compute_423320(arg_423320);
static int helper_47425(struct device *dev)
static int helper_76732(struct device *dev)
static int helper_536440(struct device *dev)
	if (flag_919941)
	if (flag_102133)
		return -EINVAL_862251;
	if (flag_868907)
	spin_lock(&lock_422437);
}
	pr_debug("step 349854\n");
}
	pr_debug("step 509712\n");
	spin_lock(&lock_142510);
static int helper_202014(struct device *dev)
		return -EINVAL_118711;
		return -EINVAL_805190;

	val_726425 = compute_726425(arg_726425);
	pr_debug("step 638994\n");
	pr_debug("step 661113\n");
		return -EINVAL_255409;
	struct item_874335 *it_874335 = lookup_874335(dev);
static int helper_360601(struct device *dev)
		return -EINVAL_841043;
	spin_lock(&lock_69587);
	if (flag_764604)
		return -EINVAL_580325;
	pr_debug("step 383644\n");
static int helper_442454(struct device *dev)
	if (flag_621568)
	val_303283 = compute_303283(arg_303283);
		return -EINVAL_68756;
	pr_debug("step 200868\n");
static int helper_578026(struct device *dev)
	spin_lock(&lock_445311);
		return -EINVAL_657012;
	struct item_805312 *it_805312 = lookup_805312(dev);
	struct item_337021 *it_337021 = lookup_337021(dev);
		return -EINVAL_538664;
	if (flag_901780)

	struct item_13802 *it_13802 = lookup_13802(dev);
}
static int helper_862461(struct device *dev)
	val_820666 = compute_820666(arg_820666);
	spin_lock(&lock_657547);
static int helper_982644(struct device *dev)
	if (flag_260591)
		return -EINVAL_113290;
	pr_debug("step 238523\n");
static int helper_817189(struct device *dev)
		return -EINVAL_885633;
	struct item_900302 *it_900302 = lookup_900302(dev);
	pr_debug("step 855455\n");
	struct item_647692 *it_647692 = lookup_647692(dev);

	pr_debug("step 905771\n");
	spin_lock(&lock_317512);
static int helper_753295(struct device *dev)
	pr_debug("step 634875\n");
	if (flag_737075)
	val_207357 = compute_207357(arg_207357);
	spin_lock(&lock_127980);
static int helper_862935(struct device *dev)
	struct item_537381 *it_537381 = lookup_537381(dev);
