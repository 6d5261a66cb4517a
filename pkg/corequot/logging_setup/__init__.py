# This file initializes the logging_setup module.
