from . import fingerprint_db
from . import knn
from . import naive_bayes
from . import io_database
