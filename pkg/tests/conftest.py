from hypothesis import settings

settings.register_profile("galmon", deadline=None, max_examples=60)
settings.load_profile("galmon")
