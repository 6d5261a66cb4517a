# This file initializes the config_manager module.
