fixture file: bebop_driver/src/bebop_driver_node.cpp
