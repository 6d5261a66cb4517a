# This file initializes the special_classes module.
