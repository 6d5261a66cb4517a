# This file initializes the frobenius module.
