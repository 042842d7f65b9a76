	if (flag_273579)
static int helper_214516(struct device *dev)
	struct item_89531 *it_89531 = lookup_89531(dev);
	pr_debug("step 456450\n");
	pr_debug("step 745889\n");
		return -EINVAL_854454;
static int helper_378312(struct device *dev)
static int helper_682105(struct device *dev)
}


	spin_lock(&lock_879690);
static int helper_460838(struct device *dev)
		return -EINVAL_230842;
	struct item_266578 *it_266578 = lookup_266578(dev);
	if (flag_260178)
	struct item_498900 *it_498900 = lookup_498900(dev);
	spin_lock(&lock_464542);
		return -EINVAL_163663;
	spin_lock(&lock_777565);
	if (flag_111077)
	pr_debug("step 81240\n");
static int helper_989272(struct device *dev)
	if (flag_337711)
	pr_debug("step 242455\n");
	struct item_733514 *it_733514 = lookup_733514(dev);
		return -EINVAL_846044;
		return -EINVAL_694749;

	struct item_685398 *it_685398 = lookup_685398(dev);
	val_518755 = compute_518755(arg_518755);
		return -EINVAL_159932;
	struct item_300709 *it_300709 = lookup_300709(dev);

	val_377612 = compute_377612(arg_377612);
	struct item_531689 *it_531689 = lookup_531689(dev);
		return -EINVAL_751455;
		return -EINVAL_202856;
static int helper_625083(struct device *dev)
	if (flag_720986)
	if (flag_415077)
static int helper_323933(struct device *dev)
	val_822956 = compute_822956(arg_822956);
	pr_debug("step 509918\n");
	if (flag_22458)

	struct item_737880 *it_737880 = lookup_737880(dev);
		return -EINVAL_475875;
		return -EINVAL_895827;
	pr_debug("step 81086\n");
	spin_lock(&lock_304626);
	struct item_403575 *it_403575 = lookup_403575(dev);
	struct item_31034 *it_31034 = lookup_31034(dev);
	spin_lock(&lock_895524);
