	spin_lock(&lock_286105);
	if (flag_333519)
	if (flag_966705)
static int helper_349053(struct device *dev)
	struct item_640310 *it_640310 = lookup_640310(dev);
	if (flag_655241)
	pr_debug("step 465554\n");
		return -EINVAL_120112;
		return -EINVAL_9001;
static int helper_544519(struct device *dev)
static int helper_15863(struct device *dev)
	if (flag_687733)
		return -EINVAL_873778;
	val_631523 = compute_631523(arg_631523);
	spin_lock(&lock_861718);


	if (flag_252844)
		return -EINVAL_864949;
	pr_debug("step 738311\n");
	pr_debug("step 736046\n");
	struct item_173403 *it_173403 = lookup_173403(dev);
	spin_lock(&lock_987120);
		return -EINVAL_744077;
	if (flag_815845)
	val_599924 = compute_599924(arg_599924);
static int helper_182442(struct device *dev)
	struct item_645106 *it_645106 = lookup_645106(dev);
	if (flag_430580)
	if (flag_656674)
	struct item_888180 *it_888180 = lookup_888180(dev);
	struct item_570191 *it_570191 = lookup_570191(dev);
	spin_lock(&lock_266686);
	pr_debug("step 253889\n");
	struct item_585385 *it_585385 = lookup_585385(dev);
	spin_lock(&lock_585461);
	struct item_354430 *it_354430 = lookup_354430(dev);
	spin_lock(&lock_225035);
static int helper_830412(struct device *dev)
	val_852973 = compute_852973(arg_852973);
	val_503457 = compute_503457(arg_503457);
	val_460554 = compute_460554(arg_460554);
	struct item_672605 *it_672605 = lookup_672605(dev);
	if (flag_653010)
	struct item_588957 *it_588957 = lookup_588957(dev);
	pr_debug("step 947257\n");
	spin_lock(&lock_778306);
static int helper_102805(struct device *dev)
	if (flag_251296)
static int helper_331461(struct device *dev)
	pr_debug("step 143822\n");
	if (flag_34818)
static int helper_79325(struct device *dev)
	if (flag_479882)
	val_648468 = compute_648468(arg_648468);
}
		return -EINVAL_319514;
	spin_lock(&lock_565056);
	pr_debug("step 354629\n");
	if (flag_785318)
		return -EINVAL_653208;
		return -EINVAL_879030;
	if (flag_784811)
static int helper_202092(struct device *dev)
		return -EINVAL_717496;
static int helper_52544(struct device *dev)
static int helper_345329(struct device *dev)
	spin_lock(&lock_643177);
	if (flag_756699)
static int helper_45595(struct device *dev)
}
	struct item_17133 *it_17133 = lookup_17133(dev);
	spin_lock(&lock_296102);
	spin_lock(&lock_871897);
	pr_debug("step 489230\n");
	pr_debug("step 741713\n");
	struct item_422547 *it_422547 = lookup_422547(dev);

	struct item_168723 *it_168723 = lookup_168723(dev);
static int helper_851403(struct device *dev)
	if (flag_1287)
	val_563434 = compute_563434(arg_563434);
	spin_lock(&lock_745794);
	struct item_183530 *it_183530 = lookup_183530(dev);
	pr_debug("step 701065\n");
	pr_debug("step 893747\n");
static int helper_788064(struct device *dev)
	struct item_87861 *it_87861 = lookup_87861(dev);
	spin_lock(&lock_129235);
	if (flag_274683)
	val_715958 = compute_715958(arg_715958);
}
static int helper_141369(struct device *dev)
		return -EINVAL_91808;
static int helper_189078(struct device *dev)
	pr_debug("step 913345\n");
	struct item_122459 *it_122459 = lookup_122459(dev);
	struct item_581039 *it_581039 = lookup_581039(dev);
	struct item_371216 *it_371216 = lookup_371216(dev);
static int helper_19460(struct device *dev)
	struct item_389697 *it_389697 = lookup_389697(dev);
	struct item_841542 *it_841542 = lookup_841542(dev);
		return -EINVAL_756142;
	spin_lock(&lock_236007);
	val_582187 = compute_582187(arg_582187);
	val_12953 = compute_12953(arg_12953);
	val_746278 = compute_746278(arg_746278);
