import os

import hypothesis

hypothesis.settings.register_profile("fast", max_examples=20)
hypothesis.settings.register_profile("thorough", max_examples=500)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))
