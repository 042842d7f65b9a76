	spin_lock(&lock_356568);
	if (flag_912141)
	pr_debug("step 502778\n");
	val_806555 = compute_806555(arg_806555);
	pr_debug("step 321814\n");

		return -EINVAL_30283;

}
		return -EINVAL_702350;
		return -EINVAL_146158;
		return -EINVAL_394457;
	spin_lock(&lock_277601);
	if (flag_479024)
	struct item_171959 *it_171959 = lookup_171959(dev);
	if (flag_338088)
	val_69872 = compute_69872(arg_69872);
}
	pr_debug("step 891462\n");
static int helper_142474(struct device *dev)
		return -EINVAL_791001;
	if (flag_540457)
		return -EINVAL_600004;

	val_473093 = compute_473093(arg_473093);
	pr_debug("step 157659\n");
	val_574023 = compute_574023(arg_574023);
		return -EINVAL_665591;
	struct item_879428 *it_879428 = lookup_879428(dev);
static int helper_920284(struct device *dev)
	struct item_946307 *it_946307 = lookup_946307(dev);
	spin_lock(&lock_682442);
static int helper_417914(struct device *dev)
	spin_lock(&lock_961769);
		return -EINVAL_121060;
static int helper_498710(struct device *dev)
	if (flag_49617)
		return -EINVAL_546006;
	spin_lock(&lock_395150);

	val_111756 = compute_111756(arg_111756);
		return -EINVAL_431370;
	if (flag_197918)
static int helper_507444(struct device *dev)
static int helper_748470(struct device *dev)
static int helper_417360(struct device *dev)
	if (flag_400681)
	val_236502 = compute_236502(arg_236502);
	if (flag_476480)
	spin_lock(&lock_835031);
	if (flag_950476)
	pr_debug("step 553386\n");

}
	spin_lock(&lock_610829);
static int helper_848355(struct device *dev)
static int helper_485135(struct device *dev)
		return -EINVAL_999708;
		return -EINVAL_437441;
	if (flag_892574)
	spin_lock(&lock_78314);
