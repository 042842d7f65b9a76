	spin_lock(&lock_817927);
		return -EINVAL_97023;
	pr_debug("step 38031\n");
	spin_lock(&lock_25612);
	pr_debug("step 917291\n");
	struct item_721660 *it_721660 = lookup_721660(dev);
	spin_lock(&lock_665689);
static int helper_288285(struct device *dev)
}
	spin_lock(&lock_884200);
	val_874677 = compute_874677(arg_874677);
	pr_debug("step 188918\n");
	struct item_283253 *it_283253 = lookup_283253(dev);
}
	if (flag_541339)
	spin_lock(&lock_322626);
	pr_debug("step 769440\n");
	if (flag_964407)
	if (flag_410007)
	if (flag_495960)
	spin_lock(&lock_745916);
	val_792985 = compute_792985(arg_792985);
}
	struct item_876117 *it_876117 = lookup_876117(dev);
static int helper_413445(struct device *dev)
	val_73227 = compute_73227(arg_73227);
		return -EINVAL_883500;
	spin_lock(&lock_401886);
	struct item_9706 *it_9706 = lookup_9706(dev);
		return -EINVAL_985801;

	val_681388 = compute_681388(arg_681388);
}
	spin_lock(&lock_663070);
static int helper_533774(struct device *dev)
	spin_lock(&lock_424770);
	val_911416 = compute_911416(arg_911416);
	spin_lock(&lock_131290);
		return -EINVAL_203807;
	spin_lock(&lock_108298);
static int helper_415044(struct device *dev)
	val_577950 = compute_577950(arg_577950);
	if (flag_752599)
	val_780540 = compute_780540(arg_780540);
static int helper_194574(struct device *dev)
	spin_lock(&lock_777339);
static int helper_850515(struct device *dev)
	spin_lock(&lock_65823);
	pr_debug("step 514200\n");
		return -EINVAL_404684;
	spin_lock(&lock_575791);
	if (flag_28691)
	pr_debug("step 658804\n");

	spin_lock(&lock_396535);
		return -EINVAL_611752;
	pr_debug("step 22311\n");
		return -EINVAL_876498;
	val_889126 = compute_889126(arg_889126);
		return -EINVAL_969491;
static int helper_473538(struct device *dev)
static int helper_356716(struct device *dev)
		return -EINVAL_544364;
static int helper_50703(struct device *dev)
	spin_lock(&lock_328815);
	spin_lock(&lock_640695);
	struct item_301662 *it_301662 = lookup_301662(dev);
		return -EINVAL_348066;
	val_456447 = compute_456447(arg_456447);
		return -EINVAL_808592;
static int helper_982434(struct device *dev)
static int helper_174438(struct device *dev)
	pr_debug("step 147453\n");
	spin_lock(&lock_873931);

}
		return -EINVAL_739494;

	if (flag_717394)
		return -EINVAL_649536;
	spin_lock(&lock_184019);
	pr_debug("step 57903\n");
	pr_debug("step 992606\n");
	val_264723 = compute_264723(arg_264723);
		return -EINVAL_603384;
	pr_debug("step 618800\n");
	if (flag_483664)

		return -EINVAL_24745;
	if (flag_131573)
	if (flag_433949)
}
	val_672020 = compute_672020(arg_672020);
		return -EINVAL_824682;
	spin_lock(&lock_74722);
	pr_debug("step 102310\n");
	spin_lock(&lock_292710);
}
	if (flag_645861)
	spin_lock(&lock_250935);
	struct item_517870 *it_517870 = lookup_517870(dev);
	if (flag_581288)
		return -EINVAL_767192;
	if (flag_285040)
	struct item_577040 *it_577040 = lookup_577040(dev);
	if (flag_191763)
		return -EINVAL_382240;
	struct item_163297 *it_163297 = lookup_163297(dev);
static int helper_178542(struct device *dev)
	spin_lock(&lock_34458);
}
static int helper_572820(struct device *dev)
static int helper_889379(struct device *dev)
		return -EINVAL_7456;
static int helper_91000(struct device *dev)
	spin_lock(&lock_155633);
	if (flag_960356)
		return -EINVAL_191118;
	pr_debug("step 19253\n");
