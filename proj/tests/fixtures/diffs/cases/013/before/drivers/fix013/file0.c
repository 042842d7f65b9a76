	spin_lock(&lock_708576);
	val_672 = compute_672(arg_672);
	val_489169 = compute_489169(arg_489169);
	struct item_612167 *it_612167 = lookup_612167(dev);
	val_455460 = compute_455460(arg_455460);
	spin_lock(&lock_139379);
static int helper_12147(struct device *dev)
		return -EINVAL_921449;
	val_718055 = compute_718055(arg_718055);
	spin_lock(&lock_441416);
	pr_debug("step 800525\n");
		return -EINVAL_83952;
	struct item_177571 *it_177571 = lookup_177571(dev);
	val_187878 = compute_187878(arg_187878);
	if (flag_65992)
	struct item_288219 *it_288219 = lookup_288219(dev);
		return -EINVAL_853210;
	struct item_789906 *it_789906 = lookup_789906(dev);
	spin_lock(&lock_762514);
	val_115285 = compute_115285(arg_115285);
	pr_debug("step 349937\n");
}
static int helper_866823(struct device *dev)
static int helper_596221(struct device *dev)

static int helper_819548(struct device *dev)
	spin_lock(&lock_329605);
}
	spin_lock(&lock_363447);
}
	pr_debug("step 592006\n");
}
}
	pr_debug("step 50401\n");
	pr_debug("step 926569\n");
static int helper_918796(struct device *dev)
		return -EINVAL_191849;
static int helper_124856(struct device *dev)
	struct item_753019 *it_753019 = lookup_753019(dev);
	if (flag_872686)
	spin_lock(&lock_411539);

		return -EINVAL_899851;
	if (flag_254128)
	val_267835 = compute_267835(arg_267835);
static int helper_238619(struct device *dev)
	struct item_721330 *it_721330 = lookup_721330(dev);
	spin_lock(&lock_275614);
	struct item_574069 *it_574069 = lookup_574069(dev);
	struct item_694679 *it_694679 = lookup_694679(dev);

	val_95013 = compute_95013(arg_95013);
	struct item_654310 *it_654310 = lookup_654310(dev);
	spin_lock(&lock_247857);
}
	spin_lock(&lock_611183);
		return -EINVAL_909296;
	pr_debug("step 935099\n");
	if (flag_662338)
static int helper_897439(struct device *dev)
}
	if (flag_666806)
	val_969525 = compute_969525(arg_969525);
	spin_lock(&lock_825227);
static int helper_584828(struct device *dev)
	val_115153 = compute_115153(arg_115153);
static int helper_26149(struct device *dev)
static int helper_44208(struct device *dev)
		return -EINVAL_503892;
	spin_lock(&lock_109348);
	if (flag_339276)
	if (flag_836099)
	val_116222 = compute_116222(arg_116222);
	val_872022 = compute_872022(arg_872022);
	if (flag_19047)
	if (flag_158321)
static int helper_924963(struct device *dev)
static int helper_704701(struct device *dev)
	val_602911 = compute_602911(arg_602911);
	val_905950 = compute_905950(arg_905950);
}
	pr_debug("step 719655\n");
	pr_debug("step 132073\n");
