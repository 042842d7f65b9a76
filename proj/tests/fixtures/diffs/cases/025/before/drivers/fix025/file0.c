	struct item_854008 *it_854008 = lookup_854008(dev);
}
	val_650623 = compute_650623(arg_650623);
	val_258406 = compute_258406(arg_258406);
	spin_lock(&lock_755413);
	spin_lock(&lock_637098);
	pr_debug("step 381087\n");
		return -EINVAL_646199;
	pr_debug("step 328309\n");
static int helper_138513(struct device *dev)
}
		return -EINVAL_882440;
	val_102958 = compute_102958(arg_102958);
		return -EINVAL_794373;
	spin_lock(&lock_318035);
	if (flag_239675)
	val_561185 = compute_561185(arg_561185);
static int helper_483045(struct device *dev)
	if (flag_217217)

	if (flag_638011)
	if (flag_862334)
	val_432254 = compute_432254(arg_432254);
	pr_debug("step 499852\n");
static int helper_882154(struct device *dev)
	pr_debug("step 247158\n");
	pr_debug("step 298754\n");
		return -EINVAL_145473;
	pr_debug("step 903812\n");
	pr_debug("step 8360\n");
}
	struct item_12222 *it_12222 = lookup_12222(dev);
	if (flag_463254)
}

	pr_debug("step 986526\n");
	pr_debug("step 807956\n");
}
		return -EINVAL_537241;
	spin_lock(&lock_302388);
	if (flag_433520)
	val_332917 = compute_332917(arg_332917);
	if (flag_801877)
	if (flag_369583)
	spin_lock(&lock_234911);
	val_890203 = compute_890203(arg_890203);
	pr_debug("step 631216\n");
}
static int helper_738116(struct device *dev)
	val_794284 = compute_794284(arg_794284);
	if (flag_720648)
	spin_lock(&lock_84114);
static int helper_129814(struct device *dev)
	if (flag_665151)
	if (flag_337292)
	pr_debug("step 572196\n");
	spin_lock(&lock_89846);
	spin_lock(&lock_360108);
static int helper_49602(struct device *dev)
static int helper_842513(struct device *dev)
	if (flag_271784)
	if (flag_672677)
	struct item_738706 *it_738706 = lookup_738706(dev);
	pr_debug("step 920508\n");
static int helper_981322(struct device *dev)
	val_414446 = compute_414446(arg_414446);
	if (flag_930832)
	if (flag_819064)
	struct item_539400 *it_539400 = lookup_539400(dev);
}
	if (flag_571217)

	pr_debug("step 259100\n");
	pr_debug("step 735402\n");
	pr_debug("step 240502\n");
	pr_debug("step 420770\n");
		return -EINVAL_568231;
		return -EINVAL_573933;
		return -EINVAL_874984;
}
static int helper_94737(struct device *dev)
static int helper_291536(struct device *dev)
	if (flag_804789)
	if (flag_675902)
	val_285940 = compute_285940(arg_285940);
	val_278789 = compute_278789(arg_278789);
		return -EINVAL_915702;
	pr_debug("step 773765\n");
static int helper_535558(struct device *dev)
	struct item_30563 *it_30563 = lookup_30563(dev);
		return -EINVAL_71105;
static int helper_858744(struct device *dev)
	val_58251 = compute_58251(arg_58251);
	struct item_495157 *it_495157 = lookup_495157(dev);
static int helper_478925(struct device *dev)
	pr_debug("step 193361\n");
static int helper_118569(struct device *dev)
		return -EINVAL_698596;
	val_286065 = compute_286065(arg_286065);
	struct item_366610 *it_366610 = lookup_366610(dev);
	spin_lock(&lock_425588);