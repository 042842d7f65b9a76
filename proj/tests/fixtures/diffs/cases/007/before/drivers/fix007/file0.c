	if (flag_74623)
		return -EINVAL_69866;
		return -EINVAL_894322;
	if (flag_226746)
	pr_debug("step 392864\n");
		return -EINVAL_296084;
	spin_lock(&lock_854284);
	struct item_4638 *it_4638 = lookup_4638(dev);
	pr_debug("step 174682\n");
static int helper_429594(struct device *dev)
static int helper_361247(struct device *dev)
	if (flag_998419)
	if (flag_610288)
static int helper_290656(struct device *dev)
static int helper_289600(struct device *dev)
		return -EINVAL_275483;
	struct item_612148 *it_612148 = lookup_612148(dev);
}
		return -EINVAL_940476;
}
	spin_lock(&lock_143135);
static int helper_623068(struct device *dev)
		return -EINVAL_836793;
}
	pr_debug("step 806626\n");
}
	struct item_934017 *it_934017 = lookup_934017(dev);
}
	pr_debug("step 766893\n");
static int helper_58069(struct device *dev)
static int helper_950411(struct device *dev)

	pr_debug("step 35134\n");
	spin_lock(&lock_794326);
	spin_lock(&lock_161627);
	spin_lock(&lock_615953);
static int helper_961010(struct device *dev)
	pr_debug("step 906413\n");
	pr_debug("step 21291\n");
	pr_debug("step 282105\n");
		return -EINVAL_338605;
	struct item_557756 *it_557756 = lookup_557756(dev);
static int helper_820525(struct device *dev)
}
		return -EINVAL_811219;
}
	val_518345 = compute_518345(arg_518345);
	pr_debug("step 668184\n");
		return -EINVAL_205625;
	spin_lock(&lock_501345);
	pr_debug("step 601545\n");
	if (flag_774464)
}
	spin_lock(&lock_271063);
		return -EINVAL_960224;

	val_153711 = compute_153711(arg_153711);
static int helper_708017(struct device *dev)
	struct item_504807 *it_504807 = lookup_504807(dev);
	struct item_686676 *it_686676 = lookup_686676(dev);
static int helper_665093(struct device *dev)
	spin_lock(&lock_828517);
	pr_debug("step 919104\n");
		return -EINVAL_930890;
		return -EINVAL_698155;
	val_965353 = compute_965353(arg_965353);
	pr_debug("step 911893\n");
		return -EINVAL_255259;
	pr_debug("step 686007\n");
static int helper_498305(struct device *dev)
	if (flag_508497)

	if (flag_702702)
	if (flag_140238)

	pr_debug("step 517382\n");

}
static int helper_188974(struct device *dev)
