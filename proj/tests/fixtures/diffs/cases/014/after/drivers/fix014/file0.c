	val_366919 = compute_366919(arg_366919);
	struct item_256744 *it_256744 = lookup_256744(dev);
		return -EINVAL_923698;
static int helper_831173(struct device *dev)
	spin_lock(&lock_545434);
	spin_lock(&lock_390294);
	spin_lock(&lock_484261);
	if (flag_71666)

		return -EINVAL_573912;
	if (flag_187808)
static int helper_28312(struct device *dev)
	if (flag_509371)
	val_247058 = compute_247058(arg_247058);
	if (flag_76095)
		return -EINVAL_937973;
		return -EINVAL_336959;
		return -EINVAL_149277;
	if (flag_270760)
	spin_lock(&lock_12648);

	spin_lock(&lock_901455);

static int helper_836631(struct device *dev)
	val_802021 = compute_802021(arg_802021);
	if (flag_710220)
static int helper_610414(struct device *dev)
	if (flag_804517)
	val_814298 = compute_814298(arg_814298);
	spin_lock(&lock_993602);
	if (flag_663215)