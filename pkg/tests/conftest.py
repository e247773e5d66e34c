import hypothesis

hypothesis.settings.register_profile(
    "petdom", max_examples=60, deadline=None
)
hypothesis.settings.load_profile("petdom")
