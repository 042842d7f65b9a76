}
		return -EINVAL_458661;
static int helper_327226(struct device *dev)
	pr_debug("step 452376\n");
}
		return -EINVAL_279800;
	val_315253 = compute_315253(arg_315253);
	if (flag_772647)
	if (flag_214238)
	struct item_773539 *it_773539 = lookup_773539(dev);
	spin_lock(&lock_976145);
static int helper_124214(struct device *dev)
		return -EINVAL_407439;
static int helper_797239(struct device *dev)
static int helper_381416(struct device *dev)
}
	val_250939 = compute_250939(arg_250939);
	pr_debug("step 592859\n");
	struct item_412159 *it_412159 = lookup_412159(dev);
	struct item_786105 *it_786105 = lookup_786105(dev);
	val_444626 = compute_444626(arg_444626);
	spin_lock(&lock_408229);

}
	struct item_987582 *it_987582 = lookup_987582(dev);
		return -EINVAL_111804;
		return -EINVAL_860597;
	if (flag_99009)
	pr_debug("step 71946\n");
	val_366020 = compute_366020(arg_366020);
static int helper_105701(struct device *dev)
		return -EINVAL_834664;
	pr_debug("step 309208\n");
	val_643422 = compute_643422(arg_643422);
}
	spin_lock(&lock_750345);
	if (flag_750435)
	spin_lock(&lock_353862);
	struct item_436172 *it_436172 = lookup_436172(dev);
	val_908846 = compute_908846(arg_908846);
	if (flag_37723)
	spin_lock(&lock_963313);

	if (flag_659555)
	spin_lock(&lock_967003);
static int helper_511585(struct device *dev)
	pr_debug("step 940155\n");
	pr_debug("step 747582\n");
	val_310806 = compute_310806(arg_310806);
	if (flag_444463)

		return -EINVAL_442786;
}
		return -EINVAL_502967;
	pr_debug("step 123946\n");
	if (flag_277038)
	pr_debug("step 6801\n");
	val_199480 = compute_199480(arg_199480);
	val_283704 = compute_283704(arg_283704);
		return -EINVAL_362156;

	spin_lock(&lock_582121);
		return -EINVAL_181977;
	spin_lock(&lock_499600);
		return -EINVAL_309045;
static int helper_202732(struct device *dev)

	pr_debug("step 277176\n");
	pr_debug("step 228831\n");
		return -EINVAL_888896;
	pr_debug("step 983495\n");
	struct item_133916 *it_133916 = lookup_133916(dev);
	val_561033 = compute_561033(arg_561033);
	if (flag_704732)
		return -EINVAL_78870;

	val_556143 = compute_556143(arg_556143);
	if (flag_159755)
	struct item_407103 *it_407103 = lookup_407103(dev);
	spin_lock(&lock_893581);
