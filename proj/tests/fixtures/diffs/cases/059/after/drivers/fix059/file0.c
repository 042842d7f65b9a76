
	spin_lock(&lock_21829);
}

	pr_debug("step 29321\n");
	if (flag_825580)
	if (flag_820911)
	spin_lock(&lock_201467);
	spin_lock(&lock_718496);
static int helper_895634(struct device *dev)
	pr_debug("step 125260\n");
}
	struct item_805352 *it_805352 = lookup_805352(dev);
	if (flag_845393)
		return -EINVAL_279056;
}

	if (flag_584026)
	if (flag_356241)
		return -EINVAL_262600;
static int helper_636265(struct device *dev)
	pr_debug("step 529316\n");
}
	spin_lock(&lock_29202);
	spin_lock(&lock_761804);

		return -EINVAL_513403;
	spin_lock(&lock_472720);