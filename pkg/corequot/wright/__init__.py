# This file initializes the wright module.
