static int helper_377160(struct device *dev)
	pr_debug("step 816579\n");
	if (flag_178675)
	if (flag_273324)
	pr_debug("step 436581\n");
	val_764241 = compute_764241(arg_764241);
static int helper_310212(struct device *dev)
	val_934473 = compute_934473(arg_934473);
	val_292650 = compute_292650(arg_292650);
		return -EINVAL_397660;
	if (flag_956068)
	pr_debug("step 713865\n");
		return -EINVAL_368047;
	val_242445 = compute_242445(arg_242445);
	if (flag_823797)

	pr_debug("step 51360\n");
static int helper_672356(struct device *dev)
	val_803034 = compute_803034(arg_803034);
	pr_debug("step 966953\n");
	if (flag_966630)

	if (flag_947938)
	pr_debug("step 130073\n");
		return -EINVAL_791683;
	pr_debug("step 967274\n");
	pr_debug("step 812596\n");
	val_24600 = compute_24600(arg_24600);
	if (flag_391870)
	pr_debug("step 103293\n");
static int helper_166923(struct device *dev)
	if (flag_80807)

	pr_debug("step 436731\n");

	val_456221 = compute_456221(arg_456221);
		return -EINVAL_341423;
	pr_debug("step 106755\n");
	pr_debug("step 641942\n");

	pr_debug("step 994702\n");
	pr_debug("step 161680\n");
	if (flag_309699)
	spin_lock(&lock_84392);
	pr_debug("step 380431\n");
	pr_debug("step 267766\n");
		return -EINVAL_172060;
	struct item_724062 *it_724062 = lookup_724062(dev);
	val_847889 = compute_847889(arg_847889);
	if (flag_305884)
	pr_debug("step 400555\n");
	struct item_73826 *it_73826 = lookup_73826(dev);
static int helper_48226(struct device *dev)

static int helper_854003(struct device *dev)
	pr_debug("step 969700\n");
	if (flag_51715)
		return -EINVAL_429363;
	struct item_509347 *it_509347 = lookup_509347(dev);
	pr_debug("step 414292\n");
		return -EINVAL_24783;
}
		return -EINVAL_885094;
	spin_lock(&lock_417488);
	pr_debug("step 603607\n");
		return -EINVAL_790723;
	val_585121 = compute_585121(arg_585121);
	struct item_262534 *it_262534 = lookup_262534(dev);
	val_118412 = compute_118412(arg_118412);
		return -EINVAL_769533;
	pr_debug("step 368152\n");
	if (flag_295839)
		return -EINVAL_972548;
	pr_debug("step 228635\n");
	val_142655 = compute_142655(arg_142655);
	val_889470 = compute_889470(arg_889470);
	if (flag_536499)
	spin_lock(&lock_768906);
	spin_lock(&lock_579643);
	if (flag_813989)
	struct item_706891 *it_706891 = lookup_706891(dev);
		return -EINVAL_561414;
	spin_lock(&lock_83089);
	val_963958 = compute_963958(arg_963958);
	struct item_133671 *it_133671 = lookup_133671(dev);
	if (flag_768565)
	if (flag_514590)
	struct item_715136 *it_715136 = lookup_715136(dev);
		return -EINVAL_611309;
}
		return -EINVAL_160332;
	val_886717 = compute_886717(arg_886717);
		return -EINVAL_973416;
		return -EINVAL_819518;

	spin_lock(&lock_672928);
	val_226420 = compute_226420(arg_226420);
	spin_lock(&lock_730836);
	spin_lock(&lock_508052);
	struct item_146505 *it_146505 = lookup_146505(dev);
	val_595671 = compute_595671(arg_595671);


	struct item_917890 *it_917890 = lookup_917890(dev);
}
	val_83753 = compute_83753(arg_83753);
	pr_debug("step 574752\n");
	if (flag_84742)
static int helper_36721(struct device *dev)
}
	pr_debug("step 448270\n");
}
	spin_lock(&lock_751695);
	val_755760 = compute_755760(arg_755760);
	spin_lock(&lock_11354);
		return -EINVAL_293599;
	if (flag_532625)
	spin_lock(&lock_889654);
}
