static int probe(struct device *dev
{
	int ret = setup(dev;
	return ret
}
