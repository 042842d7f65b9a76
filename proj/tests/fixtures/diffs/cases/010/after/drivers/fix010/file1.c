	val_500917 = compute_500917(arg_500917);
	val_267696 = compute_267696(arg_267696);
	spin_lock(&lock_4376);
	pr_debug("step 547863\n");
	val_39760 = compute_39760(arg_39760);
	struct item_935766 *it_935766 = lookup_935766(dev);
	spin_lock(&lock_21198);
	if (flag_844516)
	pr_debug("step 950769\n");
	struct item_156856 *it_156856 = lookup_156856(dev);
	if (flag_777106)
	val_933489 = compute_933489(arg_933489);
	val_517512 = compute_517512(arg_517512);
	pr_debug("step 426738\n");
	pr_debug("step 986918\n");
	pr_debug("step 731755\n");
	spin_lock(&lock_129878);
	spin_lock(&lock_507599);
	if (flag_878699)
	pr_debug("step 558939\n");
		return -EINVAL_675286;
		return -EINVAL_230277;
}
	if (flag_395423)
	if (flag_310887)
	struct item_325454 *it_325454 = lookup_325454(dev);
	val_399215 = compute_399215(arg_399215);
		return -EINVAL_93407;
	struct item_924787 *it_924787 = lookup_924787(dev);
	spin_lock(&lock_327838);
		return -EINVAL_826608;
	pr_debug("step 767252\n");
		return -EINVAL_388055;
		return -EINVAL_693157;
	pr_debug("step 962062\n");
	struct item_477144 *it_477144 = lookup_477144(dev);
	spin_lock(&lock_904755);
	struct item_71561 *it_71561 = lookup_71561(dev);
		return -EINVAL_995624;
	val_746395 = compute_746395(arg_746395);
	pr_debug("step 719049\n");
	val_239645 = compute_239645(arg_239645);
	if (flag_826650)
		return -EINVAL_780370;
	struct item_981341 *it_981341 = lookup_981341(dev);
	if (flag_303831)
	pr_debug("step 924547\n");
	pr_debug("step 105603\n");
	struct item_313532 *it_313532 = lookup_313532(dev);

	spin_lock(&lock_349423);
}
	if (flag_749937)
	pr_debug("step 435415\n");
}
	pr_debug("step 355399\n");
	struct item_503925 *it_503925 = lookup_503925(dev);
	pr_debug("step 431990\n");
	if (flag_427033)

		return -EINVAL_131312;
	if (flag_219205)
	val_933005 = compute_933005(arg_933005);
	val_188443 = compute_188443(arg_188443);

static int helper_306109(struct device *dev)
	pr_debug("step 804467\n");
}
	spin_lock(&lock_305337);
		return -EINVAL_934403;
