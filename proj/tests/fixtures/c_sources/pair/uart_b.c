#include "uart.h"

static int setup(struct port *p)
{
	port_reset(p);
	return port_enable(p, 0);
}

int uart_b_init(struct port *p)
{
	int rc = setup(p);

	if (rc)
		pr_err("uart_b: setup failed\n");
	return rc;
}

module_init(uart_b_init);
