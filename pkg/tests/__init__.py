import unittest
import os


timed_test = unittest.skipUnless(
    os.getenv('TEST_TIMED'),
    'Skipping timed test unless TEST_TIMED is set')
