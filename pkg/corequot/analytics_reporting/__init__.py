# This file initializes the analytics_reporting module.
