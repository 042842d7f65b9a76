	pr_debug("step 107420\n");
	struct item_605577 *it_605577 = lookup_605577(dev);
	spin_lock(&lock_690794);
	val_175814 = compute_175814(arg_175814);
	pr_debug("step 370608\n");
		return -EINVAL_99519;
		return -EINVAL_878450;
	struct item_489692 *it_489692 = lookup_489692(dev);
	spin_lock(&lock_696020);
	val_479975 = compute_479975(arg_479975);
	pr_debug("step 856556\n");
static int helper_672998(struct device *dev)
	struct item_109960 *it_109960 = lookup_109960(dev);
	val_493775 = compute_493775(arg_493775);
	if (flag_110475)
	if (flag_774678)
		return -EINVAL_419073;
	if (flag_178580)
static int helper_253961(struct device *dev)
	if (flag_88264)
static int helper_141146(struct device *dev)
	spin_lock(&lock_590053);
	if (flag_556690)
		return -EINVAL_196992;
	struct item_222221 *it_222221 = lookup_222221(dev);
	struct item_931653 *it_931653 = lookup_931653(dev);
		return -EINVAL_169533;
static int helper_281463(struct device *dev)
}
	pr_debug("step 665692\n");
}
static int helper_289461(struct device *dev)
	val_966025 = compute_966025(arg_966025);
	if (flag_870650)
	if (flag_80613)
		return -EINVAL_655303;
	if (flag_128416)
	val_13989 = compute_13989(arg_13989);
	spin_lock(&lock_528691);
	spin_lock(&lock_20199);
	val_724603 = compute_724603(arg_724603);
	val_396623 = compute_396623(arg_396623);
	pr_debug("step 779812\n");
	struct item_770708 *it_770708 = lookup_770708(dev);
	spin_lock(&lock_481068);
	if (flag_648478)
	if (flag_21260)
	val_599201 = compute_599201(arg_599201);
	val_811203 = compute_811203(arg_811203);
	spin_lock(&lock_795081);
	pr_debug("step 416428\n");

	if (flag_926449)
	struct item_744382 *it_744382 = lookup_744382(dev);
	spin_lock(&lock_782239);
	if (flag_496846)
	val_160023 = compute_160023(arg_160023);
	struct item_816695 *it_816695 = lookup_816695(dev);
		return -EINVAL_324838;
	spin_lock(&lock_807336);
	pr_debug("step 907564\n");
	pr_debug("step 54223\n");
static int helper_618704(struct device *dev)
		return -EINVAL_351214;
	val_148669 = compute_148669(arg_148669);
static int helper_387314(struct device *dev)
	val_935350 = compute_935350(arg_935350);
		return -EINVAL_164203;
	struct item_665853 *it_665853 = lookup_665853(dev);
	pr_debug("step 519578\n");
	if (flag_293236)
	val_901844 = compute_901844(arg_901844);

	if (flag_861493)
	val_983393 = compute_983393(arg_983393);
	pr_debug("step 967987\n");
static int helper_205633(struct device *dev)
static int helper_734780(struct device *dev)
static int helper_314687(struct device *dev)
	struct item_983191 *it_983191 = lookup_983191(dev);
	struct item_970338 *it_970338 = lookup_970338(dev);
	val_601469 = compute_601469(arg_601469);
	if (flag_544651)
		return -EINVAL_469542;
	spin_lock(&lock_616674);
	spin_lock(&lock_337369);
}
		return -EINVAL_746647;

static int helper_192657(struct device *dev)
		return -EINVAL_25114;
	struct item_350414 *it_350414 = lookup_350414(dev);
	if (flag_785696)
	struct item_401491 *it_401491 = lookup_401491(dev);
