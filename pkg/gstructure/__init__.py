VERSION = (0, 1, 0, 'final', 0)


def get_version(version=VERSION):
    main = '.'.join(str(x) for x in version[:3])
    if version[3] == 'final':
        return main
    mapping = {'alpha': 'a', 'beta': 'b', 'rc': 'rc'}
    return main + mapping[version[3]] + str(version[4])


version = __version__ = get_version(VERSION)
