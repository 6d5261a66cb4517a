# This file initializes the partition_core module.
