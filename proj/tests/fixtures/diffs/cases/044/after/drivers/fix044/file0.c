	if (flag_320634)
	struct item_795879 *it_795879 = lookup_795879(dev);
	val_410949 = compute_410949(arg_410949);
static int helper_649845(struct device *dev)
	pr_debug("step 796502\n");
	spin_lock(&lock_387085);
static int helper_30706(struct device *dev)
	struct item_809696 *it_809696 = lookup_809696(dev);
static int helper_690432(struct device *dev)
	val_450614 = compute_450614(arg_450614);
	spin_lock(&lock_824139);
	struct item_86502 *it_86502 = lookup_86502(dev);
	struct item_674777 *it_674777 = lookup_674777(dev);

static int helper_250669(struct device *dev)
		return -EINVAL_694829;
	spin_lock(&lock_60238);
static int helper_268363(struct device *dev)
		return -EINVAL_381550;
static int helper_97193(struct device *dev)
	pr_debug("step 188299\n");
static int helper_628081(struct device *dev)

		return -EINVAL_574099;

}
}
	spin_lock(&lock_854598);
	spin_lock(&lock_650693);
	spin_lock(&lock_489472);
	spin_lock(&lock_382657);
static int helper_10629(struct device *dev)
		return -EINVAL_997777;
	struct item_697849 *it_697849 = lookup_697849(dev);
	spin_lock(&lock_204847);
	spin_lock(&lock_572143);
		return -EINVAL_476942;
	struct item_856346 *it_856346 = lookup_856346(dev);
	val_635617 = compute_635617(arg_635617);

		return -EINVAL_29819;
static int helper_429610(struct device *dev)
	struct item_561486 *it_561486 = lookup_561486(dev);

	val_102325 = compute_102325(arg_102325);
	spin_lock(&lock_187155);
		return -EINVAL_542667;
	if (flag_940871)
	val_104596 = compute_104596(arg_104596);
	spin_lock(&lock_931519);
	pr_debug("step 490326\n");
		return -EINVAL_567742;

	spin_lock(&lock_644201);
		return -EINVAL_378289;

	struct item_464629 *it_464629 = lookup_464629(dev);
	spin_lock(&lock_20776);
static int helper_158671(struct device *dev)
static int helper_341182(struct device *dev)
	struct item_411766 *it_411766 = lookup_411766(dev);
	spin_lock(&lock_14424);
	if (flag_418324)
	pr_debug("step 920386\n");
		return -EINVAL_804872;
}
	val_555014 = compute_555014(arg_555014);
	pr_debug("step 853498\n");
	if (flag_209900)
	spin_lock(&lock_205431);
	struct item_45655 *it_45655 = lookup_45655(dev);
		return -EINVAL_142949;
	if (flag_940344)
	struct item_514636 *it_514636 = lookup_514636(dev);
	val_237122 = compute_237122(arg_237122);
	if (flag_228667)
	spin_lock(&lock_150303);
		return -EINVAL_23127;
	spin_lock(&lock_572215);
	pr_debug("step 264267\n");
	struct item_746825 *it_746825 = lookup_746825(dev);
	if (flag_140040)
static int helper_530189(struct device *dev)
	spin_lock(&lock_672133);
static int helper_897524(struct device *dev)
	val_20608 = compute_20608(arg_20608);
	struct item_849742 *it_849742 = lookup_849742(dev);

	pr_debug("step 693777\n");
static int helper_168630(struct device *dev)
	spin_lock(&lock_644791);
	val_287060 = compute_287060(arg_287060);
	struct item_341346 *it_341346 = lookup_341346(dev);
	pr_debug("step 9851\n");
}
	pr_debug("step 522285\n");
