	val_205034 = compute_205034(arg_205034);
	spin_lock(&lock_448101);

	struct item_646805 *it_646805 = lookup_646805(dev);
	spin_lock(&lock_740028);
}
	val_632452 = compute_632452(arg_632452);
	pr_debug("step 165942\n");
}
	spin_lock(&lock_890992);
	if (flag_912790)
	spin_lock(&lock_103468);
	spin_lock(&lock_19344);
static int helper_276783(struct device *dev)
static int helper_623109(struct device *dev)
}
	pr_debug("step 754203\n");
		return -EINVAL_482909;
	pr_debug("step 903822\n");
	spin_lock(&lock_596689);
	struct item_542803 *it_542803 = lookup_542803(dev);
	spin_lock(&lock_277538);
	val_854940 = compute_854940(arg_854940);
static int helper_696003(struct device *dev)
		return -EINVAL_386170;
		return -EINVAL_436160;
	pr_debug("step 633977\n");
	val_548310 = compute_548310(arg_548310);
	spin_lock(&lock_560949);
	pr_debug("step 943958\n");
	struct item_155596 *it_155596 = lookup_155596(dev);
	struct item_459438 *it_459438 = lookup_459438(dev);
	if (flag_426648)
	if (flag_993041)
	spin_lock(&lock_699014);
	pr_debug("step 643577\n");
	spin_lock(&lock_977512);
	spin_lock(&lock_358005);
static int helper_925259(struct device *dev)


	spin_lock(&lock_757665);

	if (flag_381866)
	spin_lock(&lock_465289);
	struct item_293272 *it_293272 = lookup_293272(dev);
	pr_debug("step 752996\n");
static int helper_946628(struct device *dev)
