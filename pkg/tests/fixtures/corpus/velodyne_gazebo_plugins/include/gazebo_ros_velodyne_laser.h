fixture file: velodyne_gazebo_plugins/include/gazebo_ros_velodyne_laser.h
