		return -EINVAL_808804;
		return -EINVAL_66536;
	pr_debug("step 319613\n");
	spin_lock(&lock_272131);
	struct item_840229 *it_840229 = lookup_840229(dev);
		return -EINVAL_462348;
	if (flag_658689)
	val_636552 = compute_636552(arg_636552);

	if (flag_555090)
	spin_lock(&lock_962967);
	spin_lock(&lock_56321);
		return -EINVAL_127925;
	struct item_632935 *it_632935 = lookup_632935(dev);
}
	val_707053 = compute_707053(arg_707053);
static int helper_489989(struct device *dev)
	if (flag_407338)
	pr_debug("step 461384\n");
static int helper_143006(struct device *dev)
	val_887975 = compute_887975(arg_887975);
	struct item_614011 *it_614011 = lookup_614011(dev);
static int helper_316681(struct device *dev)
static int helper_416877(struct device *dev)
}
static int helper_683872(struct device *dev)
	val_799379 = compute_799379(arg_799379);
	pr_debug("step 112937\n");
	struct item_534342 *it_534342 = lookup_534342(dev);
	val_569378 = compute_569378(arg_569378);
static int helper_231045(struct device *dev)
	val_268912 = compute_268912(arg_268912);
	struct item_509785 *it_509785 = lookup_509785(dev);
	val_787761 = compute_787761(arg_787761);
	if (flag_789203)
}
static int helper_386317(struct device *dev)
	pr_debug("step 953517\n");
	if (flag_786076)
}
static int helper_418782(struct device *dev)
	val_858467 = compute_858467(arg_858467);
	spin_lock(&lock_663321);

	pr_debug("step 559826\n");
	if (flag_702529)
}
	pr_debug("step 529333\n");
	struct item_403154 *it_403154 = lookup_403154(dev);
	spin_lock(&lock_817177);
		return -EINVAL_154175;

static int helper_711959(struct device *dev)
		return -EINVAL_533867;

	pr_debug("step 603531\n");
}
	pr_debug("step 442278\n");
static int helper_49361(struct device *dev)
	spin_lock(&lock_648307);
		return -EINVAL_563953;
	pr_debug("step 242991\n");
		return -EINVAL_972021;
	pr_debug("step 643207\n");
	val_926301 = compute_926301(arg_926301);
	spin_lock(&lock_751587);
	if (flag_415197)
	struct item_580250 *it_580250 = lookup_580250(dev);
static int helper_595623(struct device *dev)
	struct item_149494 *it_149494 = lookup_149494(dev);
static int helper_756555(struct device *dev)
	val_436924 = compute_436924(arg_436924);
	val_292057 = compute_292057(arg_292057);
}
	if (flag_764874)
	struct item_56747 *it_56747 = lookup_56747(dev);
}
	struct item_854966 *it_854966 = lookup_854966(dev);
	val_822274 = compute_822274(arg_822274);
	pr_debug("step 447568\n");
	spin_lock(&lock_26648);
	val_423839 = compute_423839(arg_423839);
static int helper_293580(struct device *dev)
	val_270004 = compute_270004(arg_270004);
	struct item_52121 *it_52121 = lookup_52121(dev);
		return -EINVAL_245320;
	if (flag_438488)
	val_349748 = compute_349748(arg_349748);
		return -EINVAL_372746;
		return -EINVAL_283951;
	val_51631 = compute_51631(arg_51631);

	pr_debug("step 922198\n");
	val_736159 = compute_736159(arg_736159);

	pr_debug("step 565473\n");
}
	val_477700 = compute_477700(arg_477700);
static int helper_593525(struct device *dev)
	if (flag_745241)
static int helper_923921(struct device *dev)
	pr_debug("step 104034\n");
	pr_debug("step 559042\n");
	pr_debug("step 942256\n");
}
	spin_lock(&lock_262908);
	if (flag_743636)
	struct item_92586 *it_92586 = lookup_92586(dev);
	if (flag_865729)
	if (flag_687096)