# This file initializes the verification_engine module.
