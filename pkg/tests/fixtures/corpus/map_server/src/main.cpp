fixture file: map_server/src/main.cpp
