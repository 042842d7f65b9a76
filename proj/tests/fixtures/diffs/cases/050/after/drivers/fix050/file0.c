		return -EINVAL_966838;
		return -EINVAL_297731;
	if (flag_697263)
	struct item_276644 *it_276644 = lookup_276644(dev);
static int helper_910463(struct device *dev)
		return -EINVAL_479901;
	pr_debug("step 543412\n");
	pr_debug("step 591982\n");
static int helper_305023(struct device *dev)
	if (flag_646355)
	spin_lock(&lock_890087);
	pr_debug("step 154971\n");
		return -EINVAL_131720;
		return -EINVAL_808759;
}
	val_602401 = compute_602401(arg_602401);
	struct item_816105 *it_816105 = lookup_816105(dev);
	val_229038 = compute_229038(arg_229038);
}
	struct item_725825 *it_725825 = lookup_725825(dev);
	pr_debug("step 730247\n");
	struct item_420849 *it_420849 = lookup_420849(dev);
		return -EINVAL_119658;

	pr_debug("step 108745\n");
		return -EINVAL_367795;
	val_223526 = compute_223526(arg_223526);
	if (flag_932374)
	pr_debug("step 148293\n");
	pr_debug("step 761330\n");
static int helper_883715(struct device *dev)
}
	spin_lock(&lock_130057);
	if (flag_195537)
	struct item_709851 *it_709851 = lookup_709851(dev);
	spin_lock(&lock_829281);
static int helper_532328(struct device *dev)
static int helper_968145(struct device *dev)
static int helper_709769(struct device *dev)
	if (flag_387870)
	val_890524 = compute_890524(arg_890524);
	pr_debug("step 456928\n");
	val_31114 = compute_31114(arg_31114);
static int helper_748711(struct device *dev)
	val_820611 = compute_820611(arg_820611);
		return -EINVAL_245966;
	val_952900 = compute_952900(arg_952900);
	spin_lock(&lock_379406);

static int helper_703542(struct device *dev)
static int helper_205165(struct device *dev)
	pr_debug("step 548073\n");

	struct item_134700 *it_134700 = lookup_134700(dev);
	struct item_618906 *it_618906 = lookup_618906(dev);
	val_509762 = compute_509762(arg_509762);
}
	spin_lock(&lock_648448);
	if (flag_705847)
		return -EINVAL_2995;
static int helper_918535(struct device *dev)
	val_567196 = compute_567196(arg_567196);
	pr_debug("step 550817\n");
	if (flag_582144)
}
		return -EINVAL_991786;
	if (flag_615186)
	struct item_481349 *it_481349 = lookup_481349(dev);
	struct item_463508 *it_463508 = lookup_463508(dev);
	spin_lock(&lock_568775);
