# This file initializes the qseries module.
