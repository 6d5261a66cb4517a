# This file initializes the corequot module.
