from hypothesis import settings


# Property tests draw the same examples on every run.
settings.register_profile('orbit_atlas', derandomize=True, deadline=None)
settings.load_profile('orbit_atlas')
