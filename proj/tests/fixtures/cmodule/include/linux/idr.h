#ifndef _LINUX_IDR_H
#define _LINUX_IDR_H

typedef unsigned int gfp_t;

#define GFP_KERNEL 0x0cc0u

struct ida {
	int next;
};

#define DEFINE_IDA(name) struct ida name = { 0 }

int ida_alloc(struct ida *ida, gfp_t gfp);
void ida_free(struct ida *ida, unsigned int id);

#endif
