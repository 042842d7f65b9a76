static int helper_824839(struct device *dev)

	if (flag_868233)
	struct item_801836 *it_801836 = lookup_801836(dev);
	val_965885 = compute_965885(arg_965885);
	spin_lock(&lock_175414);
	struct item_761266 *it_761266 = lookup_761266(dev);
	spin_lock(&lock_407442);
	pr_debug("step 716769\n");
	val_620727 = compute_620727(arg_620727);
	if (flag_417661)
	struct item_719693 *it_719693 = lookup_719693(dev);
	pr_debug("step 295936\n");

	struct item_675474 *it_675474 = lookup_675474(dev);
	spin_lock(&lock_50390);
	struct item_890214 *it_890214 = lookup_890214(dev);
	val_221112 = compute_221112(arg_221112);
static int helper_729294(struct device *dev)
	struct item_208274 *it_208274 = lookup_208274(dev);
	pr_debug("step 280378\n");
		return -EINVAL_889421;
	val_550726 = compute_550726(arg_550726);
	struct item_474052 *it_474052 = lookup_474052(dev);
}
static int helper_387751(struct device *dev)
	pr_debug("step 207068\n");
	pr_debug("step 3619\n");
	val_869448 = compute_869448(arg_869448);
	val_971523 = compute_971523(arg_971523);
		return -EINVAL_275883;
	if (flag_431320)
static int helper_798500(struct device *dev)
	if (flag_857562)
}

	val_36312 = compute_36312(arg_36312);
	val_330075 = compute_330075(arg_330075);
	if (flag_350831)
	val_922091 = compute_922091(arg_922091);
	pr_debug("step 159787\n");

	struct item_564621 *it_564621 = lookup_564621(dev);
	if (flag_178054)
static int helper_124275(struct device *dev)
	val_731498 = compute_731498(arg_731498);
	struct item_545568 *it_545568 = lookup_545568(dev);
	struct item_733472 *it_733472 = lookup_733472(dev);
	struct item_882175 *it_882175 = lookup_882175(dev);
static int helper_437339(struct device *dev)
	if (flag_624756)
		return -EINVAL_829438;
	if (flag_455217)
static int helper_664917(struct device *dev)
	val_115165 = compute_115165(arg_115165);
static int helper_247103(struct device *dev)
		return -EINVAL_84542;
	struct item_164801 *it_164801 = lookup_164801(dev);
		return -EINVAL_483500;
	val_131082 = compute_131082(arg_131082);
}
	val_192526 = compute_192526(arg_192526);
	spin_lock(&lock_280079);
	spin_lock(&lock_998157);
	spin_lock(&lock_583325);
	if (flag_887738)
static int helper_279109(struct device *dev)
	spin_lock(&lock_600811);
		return -EINVAL_804254;
	val_212313 = compute_212313(arg_212313);
	spin_lock(&lock_4009);

	val_16456 = compute_16456(arg_16456);

	pr_debug("step 508519\n");
	spin_lock(&lock_594630);
	if (flag_9407)
		return -EINVAL_846295;

	pr_debug("step 878286\n");
	spin_lock(&lock_865834);
	if (flag_503462)
	spin_lock(&lock_416161);
	if (flag_823960)
	if (flag_970080)
	pr_debug("step 655417\n");
	spin_lock(&lock_592193);
	struct item_495919 *it_495919 = lookup_495919(dev);
	val_115730 = compute_115730(arg_115730);
	pr_debug("step 209515\n");
static int helper_126075(struct device *dev)
	spin_lock(&lock_454627);
	struct item_437633 *it_437633 = lookup_437633(dev);
