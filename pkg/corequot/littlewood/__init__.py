# This file initializes the littlewood module.
