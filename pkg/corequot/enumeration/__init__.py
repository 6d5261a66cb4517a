# This file initializes the enumeration module.
