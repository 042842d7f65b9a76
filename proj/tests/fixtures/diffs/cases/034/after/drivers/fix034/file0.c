static int helper_371671(struct device *dev)
	struct item_876159 *it_876159 = lookup_876159(dev);
	if (flag_812444)
		return -EINVAL_459964;
}
		return -EINVAL_8912;

static int helper_285833(struct device *dev)
	pr_debug("step 234666\n");
	spin_lock(&lock_830304);
	spin_lock(&lock_460695);
	pr_debug("step 422742\n");

		return -EINVAL_281035;
static int helper_67574(struct device *dev)
	if (flag_856698)
	spin_lock(&lock_470856);
static int helper_266696(struct device *dev)
static int helper_929482(struct device *dev)
	spin_lock(&lock_474397);
	pr_debug("step 752574\n");
	struct item_780777 *it_780777 = lookup_780777(dev);
	if (flag_459484)
	pr_debug("step 992662\n");
	val_156663 = compute_156663(arg_156663);
static int helper_962261(struct device *dev)
static int helper_949608(struct device *dev)
static int helper_740717(struct device *dev)

	struct item_974142 *it_974142 = lookup_974142(dev);
	if (flag_670788)
	spin_lock(&lock_17441);
	struct item_563783 *it_563783 = lookup_563783(dev);
	val_705603 = compute_705603(arg_705603);
		return -EINVAL_501073;
	if (flag_784002)
static int helper_119211(struct device *dev)
}
	pr_debug("step 384791\n");
		return -EINVAL_508066;
	if (flag_534920)
	struct item_858339 *it_858339 = lookup_858339(dev);
		return -EINVAL_699847;
static int helper_257326(struct device *dev)
	if (flag_756230)
		return -EINVAL_57115;
	val_62568 = compute_62568(arg_62568);
	if (flag_93072)
	struct item_222803 *it_222803 = lookup_222803(dev);
static int helper_439491(struct device *dev)
}
	if (flag_948116)
	pr_debug("step 608116\n");
	val_183154 = compute_183154(arg_183154);
static int helper_107517(struct device *dev)
static int helper_189819(struct device *dev)
static int helper_179062(struct device *dev)
		return -EINVAL_305995;
		return -EINVAL_717498;
}

		return -EINVAL_541103;
		return -EINVAL_652590;
	val_107156 = compute_107156(arg_107156);
		return -EINVAL_309440;
	if (flag_983865)
	pr_debug("step 456689\n");
}
	val_141818 = compute_141818(arg_141818);
	val_798959 = compute_798959(arg_798959);
	if (flag_69883)
	val_304649 = compute_304649(arg_304649);
	struct item_645760 *it_645760 = lookup_645760(dev);
	struct item_853204 *it_853204 = lookup_853204(dev);

	pr_debug("step 605497\n");
	if (flag_639218)
static int helper_51416(struct device *dev)
	struct item_227169 *it_227169 = lookup_227169(dev);
	pr_debug("step 695112\n");
}
		return -EINVAL_207405;
	val_263418 = compute_263418(arg_263418);
	if (flag_978719)
	if (flag_334156)
	spin_lock(&lock_243574);
	val_211251 = compute_211251(arg_211251);
	val_7003 = compute_7003(arg_7003);
static int helper_20765(struct device *dev)
		return -EINVAL_459719;
		return -EINVAL_695659;
	val_330857 = compute_330857(arg_330857);
static int helper_454200(struct device *dev)
static int helper_375735(struct device *dev)
	spin_lock(&lock_782187);
		return -EINVAL_841177;
		return -EINVAL_562907;
}
		return -EINVAL_739411;
	val_718007 = compute_718007(arg_718007);
static int helper_61766(struct device *dev)

	if (flag_124133)
	if (flag_854428)
	spin_lock(&lock_516893);
}
static int helper_532166(struct device *dev)
	pr_debug("step 88089\n");
static int helper_271150(struct device *dev)
	struct item_486241 *it_486241 = lookup_486241(dev);
static int helper_895307(struct device *dev)
		return -EINVAL_286416;
		return -EINVAL_41760;
		return -EINVAL_418470;
	spin_lock(&lock_953932);
	if (flag_507840)
	struct item_782995 *it_782995 = lookup_782995(dev);
}
	struct item_540576 *it_540576 = lookup_540576(dev);
