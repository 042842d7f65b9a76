	val_38898 = compute_38898(arg_38898);
	if (flag_249878)
	struct item_303469 *it_303469 = lookup_303469(dev);
}
	struct item_506006 *it_506006 = lookup_506006(dev);
static int helper_825487(struct device *dev)
		return -EINVAL_540232;
	val_996654 = compute_996654(arg_996654);
static int helper_805805(struct device *dev)
	if (flag_368043)
	pr_debug("step 137249\n");
	spin_lock(&lock_496129);
static int helper_308440(struct device *dev)
static int helper_524893(struct device *dev)
	if (flag_901322)
}
static int helper_742291(struct device *dev)
		return -EINVAL_555511;
	val_182502 = compute_182502(arg_182502);
	val_713916 = compute_713916(arg_713916);
	spin_lock(&lock_554206);
	pr_debug("step 298421\n");
	val_249118 = compute_249118(arg_249118);
static int helper_32495(struct device *dev)

		return -EINVAL_511891;
	if (flag_414365)

	struct item_756417 *it_756417 = lookup_756417(dev);
	struct item_147284 *it_147284 = lookup_147284(dev);
	if (flag_110076)
	if (flag_716872)
static int helper_312548(struct device *dev)
static int helper_907992(struct device *dev)
	struct item_61389 *it_61389 = lookup_61389(dev);
	struct item_667407 *it_667407 = lookup_667407(dev);
	struct item_943221 *it_943221 = lookup_943221(dev);
	val_233980 = compute_233980(arg_233980);
	pr_debug("step 519808\n");
		return -EINVAL_283418;
static int helper_15605(struct device *dev)

	val_140016 = compute_140016(arg_140016);
	if (flag_385895)
	if (flag_424868)
static int helper_825554(struct device *dev)
	pr_debug("step 550019\n");
	val_648988 = compute_648988(arg_648988);
	if (flag_753164)
	val_657471 = compute_657471(arg_657471);
	struct item_497388 *it_497388 = lookup_497388(dev);
	val_750975 = compute_750975(arg_750975);
	spin_lock(&lock_333649);
	val_591934 = compute_591934(arg_591934);
	pr_debug("step 717923\n");
		return -EINVAL_797530;
}
		return -EINVAL_886722;
static int helper_783201(struct device *dev)
		return -EINVAL_113403;
		return -EINVAL_954931;
	pr_debug("step 64502\n");
static int helper_210260(struct device *dev)
	struct item_563669 *it_563669 = lookup_563669(dev);
	val_575197 = compute_575197(arg_575197);
	if (flag_533893)
}
	pr_debug("step 132404\n");
	val_696567 = compute_696567(arg_696567);
	struct item_453729 *it_453729 = lookup_453729(dev);
	if (flag_292253)
	pr_debug("step 641057\n");
		return -EINVAL_630848;
static int helper_309873(struct device *dev)
	spin_lock(&lock_128853);
	pr_debug("step 173911\n");
	pr_debug("step 747659\n");
	spin_lock(&lock_743181);

	val_984248 = compute_984248(arg_984248);
