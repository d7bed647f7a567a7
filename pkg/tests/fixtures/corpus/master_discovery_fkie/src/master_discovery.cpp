fixture file: master_discovery_fkie/src/master_discovery.cpp
