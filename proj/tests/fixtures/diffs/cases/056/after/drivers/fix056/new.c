	struct item_296657 *it_296657 = lookup_296657(dev);
	pr_debug("step 386442\n");
		return -EINVAL_458245;
	pr_debug("step 496642\n");
	pr_debug("step 785135\n");
