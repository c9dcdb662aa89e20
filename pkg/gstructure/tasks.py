"""
Example:

    from gstructure.tasks import run_battery

    report = run_battery.apply(args=('prop51',)).get()

With the default settings tasks run eagerly in-process; point
``CELERY_SETTINGS['broker_url']`` at a broker and turn
``task_always_eager`` off to distribute them.
"""

from celery import Celery
from gstructure.conf import settings

app = Celery(settings.APPLICATION_NAME)
app.conf.update(settings.CELERY_SETTINGS)


@app.task
def run_battery(name):
    """
    Run the named acceptance battery and return its report.
    """
    from gstructure.verify import run_battery as _run_battery
    return _run_battery(name).dumps()


@app.task
def atlas_row(target, n, source):
    """
    One atlas row: least reducing rank of the source family for G_n.
    """
    from gstructure.classify import atlas_row as _atlas_row
    from gstructure.reality import GroupDescriptor, GroupFamily
    return _atlas_row(GroupDescriptor(GroupFamily(target), n), GroupFamily(source)).dumps()
