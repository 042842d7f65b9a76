	val_445659 = compute_445659(arg_445659);
	spin_lock(&lock_909494);
	struct item_918195 *it_918195 = lookup_918195(dev);
		return -EINVAL_491175;
	val_778451 = compute_778451(arg_778451);
static int helper_606670(struct device *dev)
	val_342419 = compute_342419(arg_342419);
static int helper_316517(struct device *dev)
static int helper_365118(struct device *dev)
	if (flag_206302)
static int helper_356373(struct device *dev)
	struct item_128102 *it_128102 = lookup_128102(dev);
static int helper_896203(struct device *dev)
}
	if (flag_411614)
	val_473751 = compute_473751(arg_473751);
	spin_lock(&lock_382321);

	struct item_936524 *it_936524 = lookup_936524(dev);
	pr_debug("step 494693\n");
	val_13897 = compute_13897(arg_13897);
	val_458302 = compute_458302(arg_458302);
	pr_debug("step 84362\n");
	if (flag_405437)
	val_260443 = compute_260443(arg_260443);
}
	spin_lock(&lock_844192);
	struct item_14886 *it_14886 = lookup_14886(dev);
		return -EINVAL_174943;
static int helper_443226(struct device *dev)
	pr_debug("step 927537\n");
	struct item_57335 *it_57335 = lookup_57335(dev);
static int helper_51905(struct device *dev)
	spin_lock(&lock_171364);
		return -EINVAL_164528;

		return -EINVAL_944011;
	pr_debug("step 126330\n");
	pr_debug("step 602979\n");
	if (flag_522185)
static int helper_515637(struct device *dev)
	pr_debug("step 613240\n");
	if (flag_164312)
	if (flag_300169)
		return -EINVAL_503043;
	pr_debug("step 258452\n");
	spin_lock(&lock_842804);
	struct item_957316 *it_957316 = lookup_957316(dev);
static int helper_449443(struct device *dev)
	if (flag_344868)
		return -EINVAL_547378;
	val_146476 = compute_146476(arg_146476);
static int helper_519225(struct device *dev)
	struct item_382717 *it_382717 = lookup_382717(dev);
	pr_debug("step 550364\n");
		return -EINVAL_347533;
}
}
	pr_debug("step 336418\n");
	struct item_343402 *it_343402 = lookup_343402(dev);
	spin_lock(&lock_559100);
static int helper_342006(struct device *dev)
static int helper_909363(struct device *dev)
static int helper_624011(struct device *dev)
	struct item_571171 *it_571171 = lookup_571171(dev);
	spin_lock(&lock_144981);
	pr_debug("step 865707\n");
		return -EINVAL_886417;
	struct item_164239 *it_164239 = lookup_164239(dev);

		return -EINVAL_377693;
		return -EINVAL_471947;
	if (flag_620400)
	val_507192 = compute_507192(arg_507192);
	if (flag_286759)
	if (flag_915173)
	spin_lock(&lock_221503);
}
	struct item_333084 *it_333084 = lookup_333084(dev);
	spin_lock(&lock_18513);
	val_921372 = compute_921372(arg_921372);

	val_796984 = compute_796984(arg_796984);
	struct item_862426 *it_862426 = lookup_862426(dev);
static int helper_331248(struct device *dev)
	spin_lock(&lock_852881);
	pr_debug("step 330864\n");
	if (flag_436298)
	struct item_303026 *it_303026 = lookup_303026(dev);
	struct item_410863 *it_410863 = lookup_410863(dev);
	if (flag_948036)
}
	struct item_235049 *it_235049 = lookup_235049(dev);
	if (flag_276891)
	spin_lock(&lock_256683);
static int helper_755764(struct device *dev)
